#include "sppde/mesh.hpp"

#include "sppde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sppde {

ShishkinMesh build_mesh(int N, const Problem& prob, MeshOptions opts) {
    if (N < 8 || N % 4 != 0) {
        throw BadNError("build_mesh: N = " + std::to_string(N) +
                        " must be a multiple of 4 and >= 8");
    }

    ShishkinMesh mesh;
    mesh.N = N;
    mesh.d = prob.d;
    mesh.alpha = std::min(prob.alpha1, prob.alpha2);

    const double log_n = std::log(static_cast<double>(N));
    const double a1 = opts.sharper_tau ? prob.alpha1 : mesh.alpha;
    const double a2 = opts.sharper_tau ? prob.alpha2 : mesh.alpha;
    mesh.tau1 = std::min(prob.d / 2.0, 2.0 * prob.epsilon / a1 * log_n);
    mesh.tau2 = std::min((1.0 - prob.d) / 2.0, 2.0 * prob.epsilon / a2 * log_n);

    mesh.H[0] = 4.0 * (prob.d - mesh.tau1) / N;
    mesh.H[1] = 4.0 * mesh.tau1 / N;
    mesh.H[2] = 4.0 * mesh.tau2 / N;
    mesh.H[3] = 4.0 * (1.0 - prob.d - mesh.tau2) / N;

    const int q = N / 4;
    const double xl = prob.d - mesh.tau1; // left transition point
    const double xr = prob.d + mesh.tau2; // right transition point

    mesh.nodes.resize(N + 1);
    // Each quarter is generated from its own endpoint formula; the quarter
    // endpoints themselves are assigned, not accumulated.
    for (int i = 1; i < q; ++i) mesh.nodes[i] = 4.0 * i * xl / N;
    for (int i = q + 1; i < 2 * q; ++i) mesh.nodes[i] = xl + 4.0 * (i - q) * mesh.tau1 / N;
    for (int i = 2 * q + 1; i < 3 * q; ++i) mesh.nodes[i] = prob.d + 4.0 * (i - 2 * q) * mesh.tau2 / N;
    for (int i = 3 * q + 1; i < N; ++i) mesh.nodes[i] = xr + 4.0 * (i - 3 * q) * (1.0 - xr) / N;
    mesh.nodes[0] = 0.0;
    mesh.nodes[q] = xl;
    mesh.nodes[2 * q] = prob.d;
    mesh.nodes[3 * q] = xr;
    mesh.nodes[N] = 1.0;

    return mesh;
}

ShishkinMesh bisect(const ShishkinMesh& mesh) {
    ShishkinMesh fine;
    fine.N = 2 * mesh.N;
    fine.d = mesh.d;
    fine.alpha = mesh.alpha;
    fine.tau1 = mesh.tau1;
    fine.tau2 = mesh.tau2;
    for (int k = 0; k < 4; ++k) fine.H[k] = mesh.H[k] / 2.0;

    fine.nodes.resize(fine.N + 1);
    for (int i = 0; i < mesh.N; ++i) {
        fine.nodes[2 * i] = mesh.nodes[i];
        fine.nodes[2 * i + 1] = 0.5 * (mesh.nodes[i] + mesh.nodes[i + 1]);
    }
    fine.nodes[fine.N] = mesh.nodes[mesh.N];
    return fine;
}

SchemeKind scheme_kind(const ShishkinMesh& mesh, int i) {
    const int N = mesh.N;
    if (i < 0 || i > N) {
        throw IndexOutOfRangeError("scheme_kind: index " + std::to_string(i) +
                                   " outside 0.." + std::to_string(N));
    }
    if (i == 0) return SchemeKind::BoundaryLeft;
    if (i == N) return SchemeKind::BoundaryRight;
    if (i == N / 2) return SchemeKind::Interface;
    if (i <= N / 4) return SchemeKind::MidpointLeft;
    if (i < N / 2) return SchemeKind::CentralLeft;
    if (i < 3 * N / 4) return SchemeKind::CentralRight;
    return SchemeKind::MidpointRight;
}

} // namespace sppde
