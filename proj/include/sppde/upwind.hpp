#pragma once

#include "sppde/mesh.hpp"
#include "sppde/problem.hpp"
#include "sppde/scheme.hpp"

namespace sppde {

/// Reference solver kept fully independent of the hybrid scheme: simple
/// first-order upwind differences in space (D- left of d where a < 0,
/// D+ right of d where a > 0), implicit Euler in time, and first-order flux
/// continuity D+ Y = D- Y at the interface node. Same grid shape as solve().
/// Used as a cross-check oracle; both methods must converge to the same
/// function as the mesh is refined.
SolutionGrid upwind_reference_solve(const Problem& prob, const ShishkinMesh& mesh, int M);

SolutionGrid upwind_reference_solve(const Problem& prob, int N, int M);

} // namespace sppde
