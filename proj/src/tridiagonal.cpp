#include "sppde/tridiagonal.hpp"

#include "sppde/errors.hpp"

#include <cmath>
#include <string>

namespace sppde {

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    constexpr double kPivotFloor = 1e-14;
    const int n = sys.size();

    std::vector<double> c_prime(n, 0.0);
    std::vector<double> x(n, 0.0);

    double pivot = sys.diag[0];
    if (std::abs(pivot) < kPivotFloor) {
        throw ZeroPivotError("thomas_solve: zero pivot in row 0", 0);
    }
    c_prime[0] = sys.upper[0] / pivot;
    x[0] = sys.rhs[0] / pivot;

    for (int i = 1; i < n; ++i) {
        pivot = sys.diag[i] - sys.lower[i] * c_prime[i - 1];
        if (std::abs(pivot) < kPivotFloor) {
            throw ZeroPivotError("thomas_solve: zero pivot in row " + std::to_string(i), i);
        }
        c_prime[i] = sys.upper[i] / pivot;
        x[i] = (sys.rhs[i] - sys.lower[i] * x[i - 1]) / pivot;
    }

    for (int i = n - 2; i >= 0; --i) {
        x[i] -= c_prime[i] * x[i + 1];
    }
    return x;
}

} // namespace sppde
