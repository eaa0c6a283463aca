#include "sppde/analysis.hpp"

#include "sppde/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace sppde {

namespace {

// Sampled sup-norm of one branch over its closed sub-domain, 16 x 16 points.
double sampled_sup(const SpaceTimeFn& fn, double x0, double x1, double T) {
    constexpr int kAxis = 16;
    double sup = 0.0;
    for (int i = 0; i < kAxis; ++i) {
        const double x = x0 + (x1 - x0) * i / (kAxis - 1);
        for (int j = 0; j < kAxis; ++j) {
            const double t = T * j / (kAxis - 1);
            sup = std::max(sup, std::abs(fn(x, t)));
        }
    }
    return sup;
}

} // namespace

MMatrixReport monotonicity_preconditions(const Problem& prob, int N, int M) {
    MMatrixReport rep;
    rep.a_norm = std::max(sampled_sup(prob.a.left, 0.0, prob.d, prob.T),
                          sampled_sup(prob.a.right, prob.d, 1.0, prob.T));
    rep.b_norm = std::max(sampled_sup(prob.b, 0.0, prob.d, prob.T),
                          sampled_sup(prob.b, prob.d, 1.0, prob.T));
    const double alpha = std::min(prob.alpha1, prob.alpha2);

    rep.mesh_condition_ok = N / std::log(static_cast<double>(N)) > 4.0 * rep.a_norm / alpha;
    rep.time_condition_ok = 2.0 * N * rep.a_norm >= rep.b_norm + 2.0 * M / prob.T;
    rep.precondition_ok = rep.mesh_condition_ok && rep.time_condition_ok;
    rep.epsilon_regime = prob.epsilon <= 1.0 / N;
    return rep;
}

MMatrixReport check_m_matrix(const TridiagonalSystem& sys) {
    MMatrixReport rep;
    const int n = sys.size();
    for (int i = 1; i + 1 < n; ++i) {
        if (sys.lower[i] < 0.0) {
            rep.offending_rows.push_back({i, MMatrixReport::Band::Lower, sys.lower[i]});
        }
        if (sys.upper[i] < 0.0) {
            rep.offending_rows.push_back({i, MMatrixReport::Band::Upper, sys.upper[i]});
        }
        if (!(sys.diag[i] < 0.0)) {
            rep.offending_rows.push_back({i, MMatrixReport::Band::Diag, sys.diag[i]});
        }
        const double row_sum = sys.lower[i] + sys.diag[i] + sys.upper[i];
        if (!(row_sum < 0.0)) {
            rep.offending_rows.push_back({i, MMatrixReport::Band::RowSum, row_sum});
        }
    }
    rep.is_monotone = rep.offending_rows.empty();
    return rep;
}

double double_mesh_error(const Problem& prob, int N, int M,
                         SchemeOptions scheme_opts, MeshOptions mesh_opts) {
    const ShishkinMesh coarse_mesh = build_mesh(N, prob, mesh_opts);
    const SolutionGrid coarse = solve(prob, coarse_mesh, M, scheme_opts);
    const SolutionGrid fine = solve(prob, bisect(coarse_mesh), 2 * M, scheme_opts);

    double err = 0.0;
    for (int j = 0; j <= M; ++j) {
        for (int i = 0; i <= N; ++i) {
            err = std::max(err, std::abs(fine.at(2 * j, 2 * i) - coarse.at(j, i)));
        }
    }
    return err;
}

std::optional<double> order_of_convergence(double e_n, double e_2n) {
    if (!(e_n > 0.0) || !(e_2n > 0.0)) return std::nullopt;
    return std::log2(e_n / e_2n);
}

ConvergenceReport convergence_study(const Problem& prob,
                                    const std::vector<double>& epsilons,
                                    const std::vector<int>& Ns, int jobs,
                                    SchemeOptions scheme_opts, MeshOptions mesh_opts) {
    ConvergenceReport rep;
    rep.epsilons = epsilons;
    rep.Ns = Ns;
    const int ne = static_cast<int>(epsilons.size());
    const int nn = static_cast<int>(Ns.size());
    rep.errors.assign(ne, std::vector<std::optional<double>>(nn));
    rep.orders.assign(ne, std::vector<std::optional<double>>(nn));
    rep.failures.assign(ne, std::vector<std::string>(nn));
    rep.uniform_errors.assign(nn, std::nullopt);

    auto run_cell = [&](int e, int n) {
        Problem cell = prob;
        cell.epsilon = epsilons[e];
        try {
            rep.errors[e][n] =
                double_mesh_error(cell, Ns[n], Ns[n], scheme_opts, mesh_opts);
        } catch (const std::exception& ex) {
            rep.failures[e][n] = ex.what();
        }
    };

    const int cells = ne * nn;
    const int workers = std::max(1, std::min(jobs, cells));
    if (workers == 1) {
        for (int c = 0; c < cells; ++c) run_cell(c / nn, c % nn);
    } else {
        // cells write disjoint slots, so the report needs no locking
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int c = next.fetch_add(1); c < cells; c = next.fetch_add(1)) {
                    run_cell(c / nn, c % nn);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (int e = 0; e < ne; ++e) {
        for (int n = 0; n + 1 < nn; ++n) {
            if (rep.errors[e][n] && rep.errors[e][n + 1]) {
                rep.orders[e][n] = order_of_convergence(*rep.errors[e][n], *rep.errors[e][n + 1]);
            }
        }
    }
    for (int n = 0; n < nn; ++n) {
        for (int e = 0; e < ne; ++e) {
            if (rep.errors[e][n]) {
                rep.uniform_errors[n] = rep.uniform_errors[n]
                                            ? std::max(*rep.uniform_errors[n], *rep.errors[e][n])
                                            : *rep.errors[e][n];
            }
        }
    }
    return rep;
}

} // namespace sppde
