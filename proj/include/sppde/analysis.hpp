#pragma once

#include "sppde/mesh.hpp"
#include "sppde/problem.hpp"
#include "sppde/scheme.hpp"
#include "sppde/tridiagonal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sppde {

/// Monotonicity (M-matrix) diagnostics. monotonicity_preconditions() fills
/// the precondition block; check_m_matrix() fills the sign-pattern block.
struct MMatrixReport {
    // --- preconditions (sufficient conditions for the scheme's discrete
    //     maximum principle, with sampled sup-norms) ---
    bool precondition_ok = false;
    bool mesh_condition_ok = false; ///< N / ln N > 4 ||a|| / alpha
    bool time_condition_ok = false; ///< 2 N ||a|| >= ||b|| + 2 M / T
    bool epsilon_regime = false;    ///< eps <= 1/N, the regime of practical interest
    double a_norm = 0.0;
    double b_norm = 0.0;

    // --- sign pattern of an assembled system ---
    enum class Band { Lower, Diag, Upper, RowSum };
    struct Offence {
        int row;
        Band band;
        double value;
    };
    std::vector<Offence> offending_rows;
    bool is_monotone = false;
};

/// Evaluates the two sufficient conditions above for the given sizes.
/// ||a|| and ||b|| are sampled sup-norms (16 x 16 grid per side).
MMatrixReport monotonicity_preconditions(const Problem& prob, int N, int M);

/// Verifies the sign pattern that makes the negated system an M-matrix:
/// at interior rows, lower >= 0, upper >= 0, diag < 0, and
/// lower + diag + upper < 0. Boundary rows are exempt.
MMatrixReport check_m_matrix(const TridiagonalSystem& sys);

/// Double-mesh error estimate: solves on the N/M mesh and again on the
/// bisected mesh with 2M time steps (transition points inherited from the
/// coarse mesh, not recomputed), then takes the max difference over the
/// shared nodes:  max_j max_i |Y^{2N,2M}(x_{2i}, t_{2j}) - Y^{N,M}(x_i, t_j)|.
double double_mesh_error(const Problem& prob, int N, int M,
                         SchemeOptions scheme_opts = {}, MeshOptions mesh_opts = {});

/// R = log2(E_N / E_2N); empty when either error is not positive (the rate is
/// undefined, not zero).
std::optional<double> order_of_convergence(double e_n, double e_2n);

/// Errors and orders over an (epsilon, N) sweep with M = N per run,
/// mirroring the benchmark tables. Cells are indexed [eps_index][n_index].
struct ConvergenceReport {
    std::vector<double> epsilons;
    std::vector<int> Ns;
    std::vector<std::vector<std::optional<double>>> errors;
    std::vector<std::vector<std::optional<double>>> orders; ///< defined for n_index < |Ns|-1
    std::vector<std::vector<std::string>> failures;         ///< empty string = cell ok
    std::vector<std::optional<double>> uniform_errors;      ///< per N, max over epsilon

    const std::optional<double>& error_at(int e, int n) const { return errors[e][n]; }
    const std::optional<double>& order_at(int e, int n) const { return orders[e][n]; }
};

/// Runs double_mesh_error for every (epsilon, N) pair. A failing cell records
/// its message in `failures` instead of aborting the sweep. Cells are pure
/// and independent; `jobs` > 1 computes them on a small thread pool with
/// results identical to the sequential order.
ConvergenceReport convergence_study(const Problem& prob,
                                    const std::vector<double>& epsilons,
                                    const std::vector<int>& Ns, int jobs = 1,
                                    SchemeOptions scheme_opts = {},
                                    MeshOptions mesh_opts = {});

} // namespace sppde
