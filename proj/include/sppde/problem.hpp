#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sppde {

using SpaceTimeFn = std::function<double(double x, double t)>;
using TimeFn = std::function<double(double t)>;
using SpaceFn = std::function<double(double x)>;

/// Which one-sided limit to take at the jump abscissa x = d.
enum class Side { LeftLimit, RightLimit };

/// A coefficient with a jump at an interior point d: two branches, each total
/// on its closed sub-domain. Evaluation exactly at x = d is ambiguous and
/// requires an explicit Side.
struct PiecewiseField {
    SpaceTimeFn left;    ///< total on [0, d] x [0, T]
    SpaceTimeFn right;   ///< total on [d, 1] x [0, T]
    double d = 0.5;      ///< jump abscissa, in (0, 1)
    double horizon = 1.0;///< time horizon T of the branch domains
};

/// One-sided evaluation of a piecewise field.
///
/// Returns left(x,t) for x < d, right(x,t) for x > d, and the branch selected
/// by `side` at x = d. Throws MissingSideError at x = d without a side and
/// OutOfDomainError outside [0,1] x [0,horizon]. For x != d any side argument
/// is ignored.
double eval_field(const PiecewiseField& field, double x, double t,
                  std::optional<Side> side = std::nullopt);

/// The continuous initial-boundary-value problem
///
///   eps*y_xx + a*y_x - b*y - y_t = f   on (0,1) x (0,T],
///   y(0,t) = p(t),  y(1,t) = r(t),  y(x,0) = q(x),
///
/// with a and f jumping at x = d, a <= -alpha1 < 0 left of d and
/// a >= alpha2 > 0 right of it, and b >= beta >= 0. All callables must be
/// pure; a Problem is immutable after construction and safe to share across
/// concurrent solves.
struct Problem {
    double epsilon = 1.0;
    double d = 0.5;
    PiecewiseField a;
    SpaceTimeFn b;
    PiecewiseField f;
    TimeFn p;
    TimeFn r;
    SpaceFn q;
    double T = 1.0;
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double beta = 0.0;
};

/// The two benchmark problems. Both use d = 0.5, T = 1, zero initial and
/// boundary data, and alpha1 = alpha2 = 1.
///
/// id = 1:  a = -+(1 + x(1-x)),  f = -+2(1+x^2)t,  b = 1 + exp(x)
/// id = 2:  a = -+1,             f = -2xt / 2(1-x)t,  b = 0
///
/// Throws UnknownExampleError for any other id.
Problem builtin_example(int id);

enum class DiagnosticKind { Violation, Warning };

struct Diagnostic {
    DiagnosticKind kind;
    std::string message;
};

/// Samples a and b on a samples x samples grid over each closed side
/// [0,d] x [0,T] and [d,1] x [0,T] and reports:
///   - violations where a > -alpha1 on the left / a < alpha2 on the right,
///   - violations where b < beta,
///   - warnings for corner incompatibility |q(0)-p(0)| or |q(1)-r(0)| > 1e-12.
/// Never throws; problems are reported, not enforced.
std::vector<Diagnostic> validate_problem(const Problem& prob, int samples = 64);

} // namespace sppde
