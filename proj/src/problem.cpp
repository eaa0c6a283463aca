#include "sppde/problem.hpp"

#include "sppde/errors.hpp"

#include <cmath>
#include <sstream>

namespace sppde {

double eval_field(const PiecewiseField& field, double x, double t,
                  std::optional<Side> side) {
    if (x < 0.0 || x > 1.0) {
        throw OutOfDomainError("eval_field: x = " + std::to_string(x) +
                               " outside [0, 1]");
    }
    if (t < 0.0 || t > field.horizon) {
        throw OutOfDomainError("eval_field: t = " + std::to_string(t) +
                               " outside [0, " + std::to_string(field.horizon) + "]");
    }
    if (x < field.d) return field.left(x, t);
    if (x > field.d) return field.right(x, t);
    if (!side) {
        throw MissingSideError("eval_field: x equals the jump point d = " +
                               std::to_string(field.d) +
                               "; a side selector is required");
    }
    return *side == Side::LeftLimit ? field.left(x, t) : field.right(x, t);
}

Problem builtin_example(int id) {
    if (id != 1 && id != 2) {
        throw UnknownExampleError("builtin_example: unknown example id " +
                                  std::to_string(id) + " (expected 1 or 2)");
    }

    Problem prob;
    prob.d = 0.5;
    prob.T = 1.0;
    prob.alpha1 = 1.0;
    prob.alpha2 = 1.0;
    prob.p = [](double) { return 0.0; };
    prob.r = [](double) { return 0.0; };
    prob.q = [](double) { return 0.0; };

    if (id == 1) {
        prob.a = PiecewiseField{
            [](double x, double) { return -(1.0 + x * (1.0 - x)); },
            [](double x, double) { return 1.0 + x * (1.0 - x); },
            0.5, 1.0};
        prob.f = PiecewiseField{
            [](double x, double t) { return -2.0 * (1.0 + x * x) * t; },
            [](double x, double t) { return 2.0 * (1.0 + x * x) * t; },
            0.5, 1.0};
        prob.b = [](double x, double) { return 1.0 + std::exp(x); };
        prob.beta = 2.0;
    } else {
        prob.a = PiecewiseField{
            [](double, double) { return -1.0; },
            [](double, double) { return 1.0; },
            0.5, 1.0};
        prob.f = PiecewiseField{
            [](double x, double t) { return -2.0 * x * t; },
            [](double x, double t) { return 2.0 * (1.0 - x) * t; },
            0.5, 1.0};
        prob.b = [](double, double) { return 0.0; };
        prob.beta = 0.0;
    }
    return prob;
}

namespace {

std::string at_point(double x, double t) {
    std::ostringstream os;
    os << "(x=" << x << ", t=" << t << ")";
    return os.str();
}

} // namespace

std::vector<Diagnostic> validate_problem(const Problem& prob, int samples) {
    std::vector<Diagnostic> out;
    const int n = samples < 2 ? 2 : samples;

    auto sweep_side = [&](bool left_side) {
        const double x0 = left_side ? 0.0 : prob.d;
        const double x1 = left_side ? prob.d : 1.0;
        const auto& branch = left_side ? prob.a.left : prob.a.right;
        const auto& fbranch = left_side ? prob.f.left : prob.f.right;
        for (int i = 0; i < n; ++i) {
            const double x = x0 + (x1 - x0) * i / (n - 1);
            for (int j = 0; j < n; ++j) {
                const double t = prob.T * j / (n - 1);
                const double av = branch(x, t);
                if (left_side && av > -prob.alpha1) {
                    out.push_back({DiagnosticKind::Violation,
                                   "a > -alpha1 on the left side at " + at_point(x, t)});
                }
                if (!left_side && av < prob.alpha2) {
                    out.push_back({DiagnosticKind::Violation,
                                   "a < alpha2 on the right side at " + at_point(x, t)});
                }
                const double bv = prob.b(x, t);
                if (bv < prob.beta) {
                    out.push_back({DiagnosticKind::Violation,
                                   "b < beta at " + at_point(x, t)});
                }
                (void)fbranch(x, t); // must be total; evaluation itself is the check
            }
        }
    };
    sweep_side(true);
    sweep_side(false);

    constexpr double kCornerTol = 1e-12;
    if (std::abs(prob.q(0.0) - prob.p(0.0)) > kCornerTol) {
        out.push_back({DiagnosticKind::Warning,
                       "corner compatibility q(0) != p(0)"});
    }
    if (std::abs(prob.q(1.0) - prob.r(0.0)) > kCornerTol) {
        out.push_back({DiagnosticKind::Warning,
                       "corner compatibility q(1) != r(0)"});
    }
    return out;
}

} // namespace sppde
