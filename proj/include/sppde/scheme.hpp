#pragma once

#include "sppde/mesh.hpp"
#include "sppde/problem.hpp"
#include "sppde/tridiagonal.hpp"

#include <span>
#include <vector>

namespace sppde {

struct SchemeOptions {
    /// Use the unaveraged previous state Y^j(x_i) in the midpoint-row right
    /// hand side instead of the node-pair average. The averaged form is the
    /// exact Crank-Nicolson mirror of the implicit side and is the default.
    bool literal_rhs = false;
};

/// Values Y(x_i, t_j) on the full space-time mesh, stored one time level per
/// row. Level 0 holds the initial data; columns 0 and N hold the boundary
/// data at every level.
struct SolutionGrid {
    ShishkinMesh mesh;
    std::vector<double> times;   ///< t_0 .. t_M, uniform
    std::vector<double> values;  ///< (M+1) * (N+1), level-major

    int N() const { return mesh.N; }
    int M() const { return static_cast<int>(times.size()) - 1; }

    double at(int j, int i) const { return values[static_cast<size_t>(j) * (mesh.N + 1) + i]; }
    double& at(int j, int i) { return values[static_cast<size_t>(j) * (mesh.N + 1) + i]; }

    std::span<const double> level(int j) const {
        return {values.data() + static_cast<size_t>(j) * (mesh.N + 1),
                static_cast<size_t>(mesh.N + 1)};
    }

    double max_abs() const;
    /// Max |value| on one time level.
    double max_abs_level(int j) const;
};

/// Assembles the Crank-Nicolson step j -> j+1 as a tridiagonal system over
/// all N+1 nodes. Coefficients are evaluated at the half level
/// t = (j + 1/2) dt. Row stencils follow scheme_kind: midpoint upwind rows in
/// the outer quarters, central rows inside the layer bands, the transformed
/// five-point row at the interface, and identity rows with the boundary data
/// at i = 0, N.
///
/// The interface row is the five-point one-sided derivative matching at d
/// with Y_{N/2 +- 2} eliminated through the adjacent central rows; it is kept
/// in unscaled form (per unit length). With equal adjacent steps h, scaling
/// the row by 2h reproduces the textbook transformed row.
///
/// Throws SingularEliminationPivotError when |2 eps - h_l a_l| or
/// |2 eps + h_r a_r| < 1e-14.
TridiagonalSystem assemble_step(const Problem& prob, const ShishkinMesh& mesh,
                                double dt, int j, std::span<const double> y_prev,
                                SchemeOptions opts = {});

/// Marches M Crank-Nicolson steps on the given mesh. Level 0 is q sampled at
/// the nodes; boundary columns are overwritten with p, r at every level.
/// Assembly/solver failures are rethrown as SolveStepError with the step
/// index attached.
SolutionGrid solve(const Problem& prob, const ShishkinMesh& mesh, int M,
                   SchemeOptions opts = {});

/// Convenience overload: builds the mesh for N intervals first.
SolutionGrid solve(const Problem& prob, int N, int M, SchemeOptions opts = {});

} // namespace sppde
