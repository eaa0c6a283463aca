#pragma once

#include <vector>

namespace sppde {

/// One time step's linear system. All four bands have the same length n;
/// lower[0] and upper[n-1] are unused and kept at zero. Row i reads
///   lower[i]*y[i-1] + diag[i]*y[i] + upper[i]*y[i+1] = rhs[i].
/// Boundary rows have diag = 1 and no off-diagonal entries.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    explicit TridiagonalSystem(int n = 0)
        : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}

    int size() const { return static_cast<int>(diag.size()); }
};

/// Direct solve by forward elimination and back substitution.
/// Throws ZeroPivotError when an elimination pivot drops below 1e-14 in
/// magnitude. The returned vector satisfies the band equations with residual
/// max-norm <= 1e-10 * (1 + max|rhs|) for the diagonally dominant systems
/// assembled here.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

} // namespace sppde
