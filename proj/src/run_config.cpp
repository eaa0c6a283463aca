#include "sppde/run_config.hpp"

#include "sppde/analysis.hpp"
#include "sppde/problem.hpp"
#include "sppde/table_io.hpp"
#include "sppde/upwind.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

namespace sppde {

namespace {

const std::vector<double> kDefaultEpsilons = {
    std::ldexp(1.0, -8),  std::ldexp(1.0, -10), std::ldexp(1.0, -12),
    std::ldexp(1.0, -14), std::ldexp(1.0, -16), std::ldexp(1.0, -18),
    std::ldexp(1.0, -20)};

const std::vector<int> kDefaultNs = {64, 128, 256, 512, 1024};

} // namespace

double parse_epsilon_token(const std::string& token) {
    if (token.rfind("2^", 0) == 0) {
        try {
            size_t used = 0;
            const int k = std::stoi(token.substr(2), &used);
            if (used != token.size() - 2) throw std::invalid_argument(token);
            return std::ldexp(1.0, k);
        } catch (const std::exception&) {
            throw UsageError("--epsilon: cannot parse power token '" + token + "'");
        }
    }
    try {
        size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--epsilon: cannot parse '" + token + "'");
    }
}

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"hybrid Shishkin-mesh solver for parabolic convection-diffusion "
                 "problems with an interior coefficient jump"};
    app.name("sppde");

    std::string mode = "study";
    int example = 1;
    std::vector<std::string> eps_tokens;
    std::vector<int> ns;
    std::string out_dir = ".";
    std::vector<std::string> formats;
    bool emit_grid = false;
    int jobs = 1;
    bool sharper_tau = false;
    bool literal_rhs = false;

    app.set_config("--config", "", "flat key=value file mirroring the flags");
    app.add_option("--mode", mode, "solve | study | validate")
        ->check(CLI::IsMember({"solve", "study", "validate"}));
    app.add_option("--example", example, "benchmark problem id")->check(CLI::Range(1, 2));
    app.add_option("--epsilon", eps_tokens,
                   "perturbation parameter(s); accepts 2^-k power notation");
    app.add_option("--N", ns, "spatial interval count(s); multiples of 4, >= 8");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", formats, "table output formats")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--emit-grid", emit_grid, "write the solution grid as grid.csv");
    app.add_option("--jobs", jobs, "worker threads for study sweeps")->check(CLI::Range(1, 256));
    app.add_flag("--sharper-tau", sharper_tau,
                 "use alpha1/alpha2 per side for the transition widths");
    app.add_flag("--literal-rhs", literal_rhs,
                 "unaveraged previous state in midpoint right hand sides");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& err) {
        throw UsageError(err.what());
    }

    RunConfig cfg;
    cfg.mode = mode == "solve"      ? RunConfig::Mode::Solve
               : mode == "validate" ? RunConfig::Mode::Validate
                                    : RunConfig::Mode::Study;
    cfg.example_id = example;
    cfg.out_dir = out_dir;
    cfg.jobs = jobs;
    cfg.sharper_tau = sharper_tau;
    cfg.literal_rhs = literal_rhs;

    if (!formats.empty()) {
        cfg.csv = std::find(formats.begin(), formats.end(), "csv") != formats.end();
        cfg.json = std::find(formats.begin(), formats.end(), "json") != formats.end();
    }

    const bool eps_given = !eps_tokens.empty();
    if (eps_given) {
        for (const auto& tok : eps_tokens) {
            const double v = parse_epsilon_token(tok);
            if (!(v > 0.0) || v > 1.0) {
                throw UsageError("--epsilon: value " + tok + " outside (0, 1]");
            }
            cfg.epsilons.push_back(v);
            cfg.epsilon_labels.push_back(tok);
        }
    } else {
        cfg.epsilons = kDefaultEpsilons;
        for (double e : cfg.epsilons) cfg.epsilon_labels.push_back(epsilon_label(e));
    }

    const bool ns_given = !ns.empty();
    cfg.Ns = ns_given ? ns : kDefaultNs;
    for (int n : cfg.Ns) {
        if (n < 8 || n % 4 != 0) {
            throw UsageError("--N: " + std::to_string(n) + " must be a multiple of 4 and >= 8");
        }
    }

    if (cfg.mode == RunConfig::Mode::Solve) {
        if (!eps_given || cfg.epsilons.size() != 1 || !ns_given || cfg.Ns.size() != 1) {
            throw UsageError("--mode solve requires exactly one --epsilon and one --N");
        }
        cfg.emit_grid = true; // solve writes grid.csv unless a later flag set it
    }
    if (emit_grid) cfg.emit_grid = true;
    return cfg;
}

namespace {

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

int run_study(const RunConfig& cfg) {
    Problem prob = builtin_example(cfg.example_id);
    const ConvergenceReport rep =
        convergence_study(prob, cfg.epsilons, cfg.Ns, cfg.jobs,
                          SchemeOptions{cfg.literal_rhs}, MeshOptions{cfg.sharper_tau});

    std::filesystem::create_directories(cfg.out_dir);
    const std::string stem = "table_example" + std::to_string(cfg.example_id);
    if (cfg.csv) write_study_csv(rep, cfg.epsilon_labels, out_path(cfg, stem + ".csv"));
    if (cfg.json) {
        write_study_json(rep, cfg.epsilon_labels, cfg.example_id,
                         out_path(cfg, stem + ".json"));
    }

    std::cout << "double-mesh errors and orders, example " << cfg.example_id << " (M = N):\n"
              << study_csv(rep, cfg.epsilon_labels);

    bool failed = false;
    for (size_t e = 0; e < cfg.epsilons.size(); ++e) {
        for (size_t n = 0; n < cfg.Ns.size(); ++n) {
            if (!rep.failures[e][n].empty()) {
                failed = true;
                std::cerr << "cell (epsilon=" << cfg.epsilon_labels[e] << ", N=" << cfg.Ns[n]
                          << ") failed: " << rep.failures[e][n] << "\n";
            }
        }
    }
    return failed ? 3 : 0;
}

int run_solve(const RunConfig& cfg) {
    Problem prob = builtin_example(cfg.example_id);
    prob.epsilon = cfg.epsilons[0];
    const int N = cfg.Ns[0];
    try {
        const ShishkinMesh mesh = build_mesh(N, prob, MeshOptions{cfg.sharper_tau});
        const SolutionGrid grid = solve(prob, mesh, N, SchemeOptions{cfg.literal_rhs});
        if (cfg.emit_grid) {
            std::filesystem::create_directories(cfg.out_dir);
            write_grid_csv(grid, out_path(cfg, "grid.csv"));
        }
        int arg_i = 0;
        double peak = 0.0;
        for (int i = 0; i <= N; ++i) {
            if (std::abs(grid.at(N, i)) > peak) {
                peak = std::abs(grid.at(N, i));
                arg_i = i;
            }
        }
        std::printf("example %d, epsilon = %s, N = M = %d\n", cfg.example_id,
                    cfg.epsilon_labels[0].c_str(), N);
        std::printf("max |Y| = %.6g; at t = T the peak |Y| = %.6g sits at x = %.10g\n",
                    grid.max_abs(), peak, mesh.nodes[arg_i]);
        return 0;
    } catch (const Error& err) {
        std::cerr << "numerical failure (epsilon=" << cfg.epsilon_labels[0] << ", N=" << N
                  << "): " << err.what() << "\n";
        return 3;
    }
}

int run_validate(const RunConfig& cfg) {
    Problem prob = builtin_example(cfg.example_id);
    prob.epsilon = cfg.epsilons[0];
    const int N = cfg.Ns[0];

    const auto diags = validate_problem(prob);
    if (diags.empty()) {
        std::cout << "problem data: no violations, no warnings\n";
    }
    for (const auto& d : diags) {
        std::cout << (d.kind == DiagnosticKind::Violation ? "violation: " : "warning: ")
                  << d.message << "\n";
    }

    const MMatrixReport rep = monotonicity_preconditions(prob, N, N);
    std::printf("sampled norms: ||a|| = %.6g, ||b|| = %.6g\n", rep.a_norm, rep.b_norm);
    std::printf("N/ln N > 4||a||/alpha         : %s\n", rep.mesh_condition_ok ? "yes" : "no");
    std::printf("2N||a|| >= ||b|| + 2M/T       : %s\n", rep.time_condition_ok ? "yes" : "no");
    std::printf("discrete maximum principle preconditions (N = M = %d): %s\n", N,
                rep.precondition_ok ? "satisfied" : "NOT satisfied");
    std::printf("epsilon <= 1/N regime         : %s\n", rep.epsilon_regime ? "yes" : "no");
    return 0;
}

} // namespace

int run(const RunConfig& cfg) {
    switch (cfg.mode) {
    case RunConfig::Mode::Study:
        return run_study(cfg);
    case RunConfig::Mode::Solve:
        return run_solve(cfg);
    case RunConfig::Mode::Validate:
        return run_validate(cfg);
    }
    return 2;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    try {
        const RunConfig cfg = parse_config(args);
        return run(cfg);
    } catch (const HelpRequested& help) {
        std::cout << help.what();
        return 0;
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const Error& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return 3;
    }
}

} // namespace sppde
