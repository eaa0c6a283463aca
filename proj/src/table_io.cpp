#include "sppde/table_io.hpp"

#include "sppde/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sppde {

namespace {

std::string printf_str(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << text;
    out.flush();
    if (!out) throw Error("write failed: " + path);
}

} // namespace

std::string format_error(double v) { return printf_str("%.2e", v); }

std::string format_order(double v) { return printf_str("%.4f", v); }

std::string epsilon_label(double eps) {
    int exp = 0;
    const double mant = std::frexp(eps, &exp);
    if (eps > 0.0 && mant == 0.5) {
        return "2^" + std::to_string(exp - 1);
    }
    return printf_str("%g", eps);
}

std::string study_csv(const ConvergenceReport& rep,
                      const std::vector<std::string>& eps_labels) {
    std::ostringstream out;
    out << "epsilon";
    for (int n : rep.Ns) out << ',' << n;
    out << '\n';
    for (size_t e = 0; e < rep.epsilons.size(); ++e) {
        out << eps_labels[e];
        for (size_t n = 0; n < rep.Ns.size(); ++n) {
            out << ',' << (rep.errors[e][n] ? format_error(*rep.errors[e][n]) : "failed");
        }
        out << '\n';
        out << "order";
        for (size_t n = 0; n < rep.Ns.size(); ++n) {
            out << ',' << (rep.orders[e][n] ? format_order(*rep.orders[e][n]) : "");
        }
        out << '\n';
    }
    return out.str();
}

void write_study_csv(const ConvergenceReport& rep,
                     const std::vector<std::string>& eps_labels,
                     const std::string& path) {
    write_text_file(study_csv(rep, eps_labels), path);
}

std::string study_json(const ConvergenceReport& rep,
                       const std::vector<std::string>& eps_labels, int example_id) {
    nlohmann::json doc;
    doc["example"] = example_id;
    doc["Ns"] = rep.Ns;
    doc["epsilons"] = nlohmann::json::array();
    for (size_t e = 0; e < rep.epsilons.size(); ++e) {
        doc["epsilons"].push_back({{"label", eps_labels[e]}, {"value", rep.epsilons[e]}});
    }
    doc["cells"] = nlohmann::json::array();
    for (size_t e = 0; e < rep.epsilons.size(); ++e) {
        for (size_t n = 0; n < rep.Ns.size(); ++n) {
            nlohmann::json cell;
            cell["epsilon"] = eps_labels[e];
            cell["N"] = rep.Ns[n];
            if (rep.errors[e][n]) {
                cell["error"] = *rep.errors[e][n];
                cell["error_display"] = format_error(*rep.errors[e][n]);
            } else {
                cell["error"] = nullptr;
                cell["failure"] = rep.failures[e][n];
            }
            if (rep.orders[e][n]) {
                cell["order"] = *rep.orders[e][n];
                cell["order_display"] = format_order(*rep.orders[e][n]);
            } else {
                cell["order"] = nullptr;
            }
            doc["cells"].push_back(std::move(cell));
        }
    }
    doc["uniform_errors"] = nlohmann::json::array();
    for (size_t n = 0; n < rep.Ns.size(); ++n) {
        doc["uniform_errors"].push_back(
            {{"N", rep.Ns[n]},
             {"error", rep.uniform_errors[n] ? nlohmann::json(*rep.uniform_errors[n])
                                             : nlohmann::json(nullptr)}});
    }
    return doc.dump(2) + "\n";
}

void write_study_json(const ConvergenceReport& rep,
                      const std::vector<std::string>& eps_labels, int example_id,
                      const std::string& path) {
    write_text_file(study_json(rep, eps_labels, example_id), path);
}

std::string grid_csv(const SolutionGrid& grid) {
    std::ostringstream out;
    out << "x,t,y\n";
    char buf[80];
    for (int j = 0; j <= grid.M(); ++j) {
        for (int i = 0; i <= grid.N(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", grid.mesh.nodes[i],
                          grid.times[j], grid.at(j, i));
            out << buf;
        }
    }
    return out.str();
}

void write_grid_csv(const SolutionGrid& grid, const std::string& path) {
    write_text_file(grid_csv(grid), path);
}

} // namespace sppde
