#include "sppde/scheme.hpp"

#include "sppde/errors.hpp"

#include <cmath>
#include <string>

namespace sppde {

double SolutionGrid::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double SolutionGrid::max_abs_level(int j) const {
    double m = 0.0;
    for (double v : level(j)) m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Divided differences of the previous time level.
struct PrevDiffs {
    std::span<const double> y;
    const ShishkinMesh& mesh;

    double minus(int i) const { return (y[i] - y[i - 1]) / mesh.h(i); }
    double plus(int i) const { return (y[i + 1] - y[i]) / mesh.h(i + 1); }
    double centered(int i) const { return (y[i + 1] - y[i - 1]) / (2.0 * mesh.hbar(i)); }
    double second(int i) const { return (plus(i) - minus(i)) / mesh.hbar(i); }
};

} // namespace

TridiagonalSystem assemble_step(const Problem& prob, const ShishkinMesh& mesh,
                                double dt, int j, std::span<const double> y_prev,
                                SchemeOptions opts) {
    const int N = mesh.N;
    const int half = N / 2;
    const double eps = prob.epsilon;
    const double t_mid = (j + 0.5) * dt;
    const double t_new = (j + 1) * dt;
    const double two_over_dt = 2.0 / dt;

    // Nodal coefficient values at the half level. The interface node N/2 is
    // never evaluated (its row only touches the neighbours).
    std::vector<double> av(N + 1, 0.0), bv(N + 1, 0.0), fv(N + 1, 0.0);
    for (int i = 0; i <= N; ++i) {
        if (i == half) continue;
        const bool left = i < half;
        const double x = mesh.nodes[i];
        av[i] = left ? prob.a.left(x, t_mid) : prob.a.right(x, t_mid);
        bv[i] = prob.b(x, t_mid);
        fv[i] = left ? prob.f.left(x, t_mid) : prob.f.right(x, t_mid);
    }

    const PrevDiffs prev{y_prev, mesh};
    TridiagonalSystem sys(N + 1);

    auto central_rhs = [&](int i) {
        return 2.0 * fv[i] - eps * prev.second(i) - av[i] * prev.centered(i) +
               (bv[i] - two_over_dt) * y_prev[i];
    };

    for (int i = 1; i < N; ++i) {
        if (i == half) continue;
        const double hi = mesh.h(i);
        const double hip = mesh.h(i + 1);
        const double hb = 0.5 * (hi + hip);

        switch (scheme_kind(mesh, i)) {
        case SchemeKind::CentralLeft:
        case SchemeKind::CentralRight: {
            sys.lower[i] = eps / (hi * hb) - av[i] / (2.0 * hb);
            sys.upper[i] = eps / (hip * hb) + av[i] / (2.0 * hb);
            sys.diag[i] = -sys.lower[i] - sys.upper[i] - (bv[i] + two_over_dt);
            sys.rhs[i] = central_rhs(i);
            break;
        }
        case SchemeKind::MidpointLeft: {
            const double abar = 0.5 * (av[i - 1] + av[i]);
            const double bbar = 0.5 * (bv[i - 1] + bv[i]);
            const double fbar = 0.5 * (fv[i - 1] + fv[i]);
            // half of b + 2/dt: the reaction + time mass is split over the
            // two averaged nodes x_{i-1}, x_i
            const double half_mass = 0.5 * bbar + 1.0 / dt;
            sys.lower[i] = eps / (hi * hb) - abar / hi - half_mass;
            sys.upper[i] = eps / (hip * hb);
            sys.diag[i] = -sys.lower[i] - sys.upper[i] - (bbar + two_over_dt);
            const double ybar =
                opts.literal_rhs ? y_prev[i] : 0.5 * (y_prev[i] + y_prev[i - 1]);
            sys.rhs[i] = 2.0 * fbar - eps * prev.second(i) - abar * prev.minus(i) +
                         (bbar - two_over_dt) * ybar;
            break;
        }
        case SchemeKind::MidpointRight: {
            const double abar = 0.5 * (av[i] + av[i + 1]);
            const double bbar = 0.5 * (bv[i] + bv[i + 1]);
            const double fbar = 0.5 * (fv[i] + fv[i + 1]);
            const double half_mass = 0.5 * bbar + 1.0 / dt;
            sys.lower[i] = eps / (hi * hb);
            sys.upper[i] = eps / (hip * hb) + abar / hip - half_mass;
            sys.diag[i] = -sys.lower[i] - sys.upper[i] - (bbar + two_over_dt);
            const double ybar =
                opts.literal_rhs ? y_prev[i] : 0.5 * (y_prev[i] + y_prev[i + 1]);
            sys.rhs[i] = 2.0 * fbar - eps * prev.second(i) - abar * prev.plus(i) +
                         (bbar - two_over_dt) * ybar;
            break;
        }
        default:
            break; // interface and boundaries handled below
        }
    }

    // Interface row. The five-point derivative-matching equation
    //   [-Y_{h+2} + 4 Y_{h+1} - 3 Y_h]/(2 h_r) - [Y_{h-2} - 4 Y_{h-1} + 3 Y_h]/(2 h_l) = 0
    // is reduced to three points by expressing Y_{h-2} and Y_{h+2} through
    // the central rows at h-1 and h+1 (steps are uniform there: h_l = H2,
    // h_r = H3).
    {
        const double hl = mesh.H[1];
        const double hr = mesh.H[2];
        const double al = av[half - 1];
        const double ar = av[half + 1];
        const double cl = bv[half - 1] + two_over_dt;
        const double cr = bv[half + 1] + two_over_dt;
        const double denom_l = 2.0 * eps - hl * al;
        const double denom_r = 2.0 * eps + hr * ar;
        if (std::abs(denom_l) < 1e-14 || std::abs(denom_r) < 1e-14) {
            throw SingularEliminationPivotError(
                "assemble_step: interface elimination pivot ~ 0 (|2eps - h_l a_l| = " +
                std::to_string(std::abs(denom_l)) + ", |2eps + h_r a_r| = " +
                std::to_string(std::abs(denom_r)) + ")");
        }
        const double gl = sys.rhs[half - 1];
        const double gr = sys.rhs[half + 1];
        sys.lower[half] = 0.5 / hl * (4.0 - (4.0 * eps + 2.0 * hl * hl * cl) / denom_l);
        sys.upper[half] = 0.5 / hr * (4.0 - (4.0 * eps + 2.0 * hr * hr * cr) / denom_r);
        sys.diag[half] = 0.5 / hr * ((2.0 * eps - hr * ar) / denom_r - 3.0) +
                         0.5 / hl * ((2.0 * eps + hl * al) / denom_l - 3.0);
        sys.rhs[half] = hl * gl / denom_l + hr * gr / denom_r;
    }

    sys.diag[0] = 1.0;
    sys.rhs[0] = prob.p(t_new);
    sys.diag[N] = 1.0;
    sys.rhs[N] = prob.r(t_new);
    return sys;
}

SolutionGrid solve(const Problem& prob, const ShishkinMesh& mesh, int M,
                   SchemeOptions opts) {
    const int N = mesh.N;
    const double dt = prob.T / M;

    SolutionGrid grid;
    grid.mesh = mesh;
    grid.times.resize(M + 1);
    for (int j = 0; j <= M; ++j) grid.times[j] = prob.T * j / M;
    grid.values.assign(static_cast<size_t>(M + 1) * (N + 1), 0.0);

    for (int i = 0; i <= N; ++i) grid.at(0, i) = prob.q(mesh.nodes[i]);

    for (int j = 0; j < M; ++j) {
        try {
            const TridiagonalSystem sys = assemble_step(prob, mesh, dt, j, grid.level(j), opts);
            const std::vector<double> y = thomas_solve(sys);
            for (int i = 0; i <= N; ++i) grid.at(j + 1, i) = y[i];
            grid.at(j + 1, 0) = prob.p(grid.times[j + 1]);
            grid.at(j + 1, N) = prob.r(grid.times[j + 1]);
        } catch (const Error& err) {
            throw SolveStepError("solve: step j = " + std::to_string(j) + ": " + err.what(), j);
        }
    }
    return grid;
}

SolutionGrid solve(const Problem& prob, int N, int M, SchemeOptions opts) {
    return solve(prob, build_mesh(N, prob), M, opts);
}

} // namespace sppde
