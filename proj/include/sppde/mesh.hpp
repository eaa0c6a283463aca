#pragma once

#include "sppde/problem.hpp"

#include <array>
#include <vector>

namespace sppde {

/// Which difference stencil applies at a node index.
enum class SchemeKind {
    BoundaryLeft,
    MidpointLeft,
    CentralLeft,
    Interface,
    CentralRight,
    MidpointRight,
    BoundaryRight,
};

struct MeshOptions {
    /// Use alpha1 for tau1 and alpha2 for tau2 instead of the common
    /// alpha = min{alpha1, alpha2}.
    bool sharper_tau = false;
};

/// Piecewise-uniform mesh over [0,1]: four sub-intervals
/// [0, d-tau1], [d-tau1, d], [d, d+tau2], [d+tau2, 1] with N/4 cells each.
/// The interface node x_{N/2} equals d exactly, x_{N/4} = d - tau1 and
/// x_{3N/4} = d + tau2. Immutable after construction.
struct ShishkinMesh {
    int N = 0;
    std::vector<double> nodes;   ///< x_0 .. x_N, strictly increasing
    double tau1 = 0.0;
    double tau2 = 0.0;
    std::array<double, 4> H{};   ///< per-quarter cell widths H1..H4
    double d = 0.5;
    double alpha = 1.0;          ///< min{alpha1, alpha2} (or per-side, see MeshOptions)

    /// Exact width of cell i (between x_{i-1} and x_i), i in 1..N.
    double h(int i) const {
        if (i <= N / 4) return H[0];
        if (i <= N / 2) return H[1];
        if (i <= 3 * N / 4) return H[2];
        return H[3];
    }

    /// Average of the two cell widths around node i, i in 1..N-1.
    double hbar(int i) const { return 0.5 * (h(i) + h(i + 1)); }
};

/// Builds the mesh for the given problem:
///   tau1 = min{d/2, (2 eps / alpha) ln N},  tau2 = min{(1-d)/2, (2 eps / alpha) ln N}.
/// N must be a multiple of 4 and at least 8 (throws BadNError otherwise).
/// The quarter endpoints are assigned exactly, not accumulated, so that the
/// interface node is bit-exact.
ShishkinMesh build_mesh(int N, const Problem& prob, MeshOptions opts = {});

/// Halves every cell of `mesh` (2N intervals, same transition points).
/// This is the fine mesh of the double-mesh error estimate: nodes of `mesh`
/// sit at the even indices of the result.
ShishkinMesh bisect(const ShishkinMesh& mesh);

/// Stencil selector:
///   i = 0 -> BoundaryLeft, 1..N/4 -> MidpointLeft, N/4+1..N/2-1 -> CentralLeft,
///   N/2 -> Interface, N/2+1..3N/4-1 -> CentralRight, 3N/4..N-1 -> MidpointRight,
///   i = N -> BoundaryRight.
/// The transition nodes x_{N/4}, x_{3N/4} take the midpoint stencil.
SchemeKind scheme_kind(const ShishkinMesh& mesh, int i);

} // namespace sppde
