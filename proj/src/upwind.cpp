#include "sppde/upwind.hpp"

#include "sppde/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace sppde {

namespace {

// Local elimination so the reference path shares no solver code with the
// hybrid scheme.
void eliminate_tridiagonal(std::vector<double>& lo, std::vector<double>& di,
                           std::vector<double>& up, std::vector<double>& rhs,
                           std::vector<double>& out) {
    const int n = static_cast<int>(di.size());
    for (int i = 1; i < n; ++i) {
        if (std::abs(di[i - 1]) < 1e-14) {
            throw ZeroPivotError("upwind_reference_solve: zero pivot in row " +
                                     std::to_string(i - 1),
                                 i - 1);
        }
        const double w = lo[i] / di[i - 1];
        di[i] -= w * up[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    if (std::abs(di[n - 1]) < 1e-14) {
        throw ZeroPivotError("upwind_reference_solve: zero pivot in row " +
                                 std::to_string(n - 1),
                             n - 1);
    }
    out[n - 1] = rhs[n - 1] / di[n - 1];
    for (int i = n - 2; i >= 0; --i) {
        out[i] = (rhs[i] - up[i] * out[i + 1]) / di[i];
    }
}

} // namespace

SolutionGrid upwind_reference_solve(const Problem& prob, const ShishkinMesh& mesh, int M) {
    const int N = mesh.N;
    const int half = N / 2;
    const double eps = prob.epsilon;
    const double dt = prob.T / M;

    SolutionGrid grid;
    grid.mesh = mesh;
    grid.times.resize(M + 1);
    for (int j = 0; j <= M; ++j) grid.times[j] = prob.T * j / M;
    grid.values.assign(static_cast<size_t>(M + 1) * (N + 1), 0.0);
    for (int i = 0; i <= N; ++i) grid.at(0, i) = prob.q(mesh.nodes[i]);

    std::vector<double> lo(N + 1), di(N + 1), up(N + 1), rhs(N + 1), y(N + 1);

    for (int j = 0; j < M; ++j) {
        const double t_new = grid.times[j + 1];
        for (int i = 1; i < N; ++i) {
            const double hi = mesh.h(i);
            const double hip = mesh.h(i + 1);
            const double hb = 0.5 * (hi + hip);
            if (i == half) {
                // D+ Y = D- Y: first-order derivative continuity across d.
                lo[i] = 1.0 / hi;
                up[i] = 1.0 / hip;
                di[i] = -(lo[i] + up[i]);
                rhs[i] = 0.0;
                continue;
            }
            const bool left = i < half;
            const double x = mesh.nodes[i];
            const double a = left ? prob.a.left(x, t_new) : prob.a.right(x, t_new);
            const double b = prob.b(x, t_new);
            const double f = left ? prob.f.left(x, t_new) : prob.f.right(x, t_new);
            const double dl = eps / (hi * hb);
            const double dr = eps / (hip * hb);
            if (left) {
                lo[i] = dl - a / hi;
                up[i] = dr;
                di[i] = -dl - dr + a / hi - (b + 1.0 / dt);
            } else {
                lo[i] = dl;
                up[i] = dr + a / hip;
                di[i] = -dl - dr - a / hip - (b + 1.0 / dt);
            }
            rhs[i] = f - grid.at(j, i) / dt;
        }
        lo[0] = up[0] = 0.0;
        di[0] = 1.0;
        rhs[0] = prob.p(t_new);
        lo[N] = up[N] = 0.0;
        di[N] = 1.0;
        rhs[N] = prob.r(t_new);

        try {
            eliminate_tridiagonal(lo, di, up, rhs, y);
        } catch (const Error& err) {
            throw SolveStepError("upwind_reference_solve: step j = " + std::to_string(j) +
                                     ": " + err.what(),
                                 j);
        }
        for (int i = 0; i <= N; ++i) grid.at(j + 1, i) = y[i];
    }
    return grid;
}

SolutionGrid upwind_reference_solve(const Problem& prob, int N, int M) {
    return upwind_reference_solve(prob, build_mesh(N, prob), M);
}

} // namespace sppde
