// Copyright 2026 The dipnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dipnet/netmodel.h"

#include <cmath>
#include <stdexcept>

namespace dipnet {

namespace pauli {

const ComplexMatrix &I2() {
    static const ComplexMatrix m{{1, 0}, {0, 1}};
    return m;
}
const ComplexMatrix &X() {
    static const ComplexMatrix m{{0, 1}, {1, 0}};
    return m;
}
const ComplexMatrix &Y() {
    static const ComplexMatrix m{{0, cplx(0, -1)}, {cplx(0, 1), 0}};
    return m;
}
const ComplexMatrix &Z() {
    static const ComplexMatrix m{{1, 0}, {0, -1}};
    return m;
}

}  // namespace pauli

std::array<double, 4> XStateParams::bell_weights() const {
    return {(1 + a - b + c) / 4, (1 - a + b + c) / 4, (1 + a + b - c) / 4, (1 - a - b - c) / 4};
}

bool XStateParams::is_positive(double tolerance) const {
    for (double w : bell_weights()) {
        if (w < -tolerance) {
            return false;
        }
    }
    return true;
}

double PropagatorCoeffs::norm_sq() const {
    return std::norm(r1) + std::norm(r2) + std::norm(r3) + std::norm(r4);
}

std::string_view to_string(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::MM:
            return "MM";
        case NetworkKind::WW:
            return "WW";
        case NetworkKind::MW:
            return "MW";
    }
    return "?";
}

NetworkKind network_kind_from_string(std::string_view text) {
    if (text == "MM") {
        return NetworkKind::MM;
    }
    if (text == "WW") {
        return NetworkKind::WW;
    }
    if (text == "MW") {
        return NetworkKind::MW;
    }
    throw std::invalid_argument("unknown network kind '" + std::string(text) + "' (expected MM, WW or MW)");
}

void NetworkConfig::validate() const {
    if (!(werner_x1 >= 0 && werner_x1 <= 1)) {
        throw std::invalid_argument("werner_x1 must lie in [0, 1], got " + std::to_string(werner_x1));
    }
    if (!(werner_x2 >= 0 && werner_x2 <= 1)) {
        throw std::invalid_argument("werner_x2 must lie in [0, 1], got " + std::to_string(werner_x2));
    }
}

XStateParams NetworkConfig::pair1() const {
    return kind == NetworkKind::WW ? XStateParams::werner(werner_x1) : XStateParams::singlet();
}

XStateParams NetworkConfig::pair2() const {
    return kind == NetworkKind::MM ? XStateParams::singlet() : XStateParams::werner(werner_x2);
}

ComplexMatrix dipolar_hamiltonian(double delta, double eps) {
    double d = delta / 6;
    double e = eps / 2;
    return ComplexMatrix{
        {d, 0, 0, e},
        {0, -d, -d, 0},
        {0, -d, -d, 0},
        {e, 0, 0, d},
    };
}

PropagatorCoeffs propagator_coeffs(const DipolarParams &p) {
    PropagatorCoeffs k;
    k.c1 = std::cos(p.kappa_x() * p.tau);
    k.c2 = std::cos(p.kappa_y() * p.tau);
    k.c3 = std::cos(p.kappa_z() * p.tau);
    k.s1 = std::sin(p.kappa_x() * p.tau);
    k.s2 = std::sin(p.kappa_y() * p.tau);
    k.s3 = std::sin(p.kappa_z() * p.tau);
    k.r1 = cplx(k.c1 * k.c2 * k.c3, -k.s1 * k.s2 * k.s3);
    k.r2 = cplx(k.c1 * k.s2 * k.s3, -k.c2 * k.c3 * k.s1);
    k.r3 = cplx(-k.c2 * k.s1 * k.s3, k.c1 * k.c3 * k.s2);
    k.r4 = cplx(k.c3 * k.s1 * k.s2, -k.c1 * k.c2 * k.s3);
    return k;
}

ComplexMatrix propagator_matrix(const DipolarParams &p) {
    PropagatorCoeffs k = propagator_coeffs(p);
    cplx outer = k.r1 + k.r4;
    cplx inner = k.r1 - k.r4;
    cplx corner = k.r2 + k.r3;
    cplx swap = k.r2 - k.r3;
    return ComplexMatrix{
        {outer, 0, 0, corner},
        {0, inner, swap, 0},
        {0, swap, inner, 0},
        {corner, 0, 0, outer},
    };
}

double physical_time(double tau, double delta) {
    return kTauToDeltaTime * tau / delta;
}

DensityMatrix x_state(const XStateParams &params) {
    if (!params.is_positive()) {
        auto w = params.bell_weights();
        throw NotPositive("x_state: (a, b, c) = (" + std::to_string(params.a) + ", " + std::to_string(params.b) +
                          ", " + std::to_string(params.c) + ") has Bell weights " + std::to_string(w[0]) + ", " +
                          std::to_string(w[1]) + ", " + std::to_string(w[2]) + ", " + std::to_string(w[3]));
    }
    double diag_same = (1 + params.c) / 4;
    double diag_diff = (1 - params.c) / 4;
    double corner = (params.a - params.b) / 4;
    double inner = (params.a + params.b) / 4;
    return DensityMatrix(ComplexMatrix{
        {diag_same, 0, 0, corner},
        {0, diag_diff, inner, 0},
        {0, inner, diag_diff, 0},
        {corner, 0, 0, diag_same},
    });
}

DensityMatrix initial_network(const XStateParams &pair1, const XStateParams &pair2) {
    return kron(x_state(pair1), x_state(pair2));
}

DensityMatrix initial_network(const NetworkConfig &cfg) {
    cfg.validate();
    return initial_network(cfg.pair1(), cfg.pair2());
}

DensityMatrix evolve_pair(const DensityMatrix &rho, const ComplexMatrix &u, size_t i, size_t j) {
    const size_t n = rho.nqubits();
    if (!(i < j && j < n)) {
        throw BadSubsystem("evolve_pair: need i < j < " + std::to_string(n) + ", got (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
    }
    if (u.dim() != 4) {
        throw BadDimension("evolve_pair: two-qubit gate must be 4x4");
    }
    double uerr = max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(4));
    if (uerr > 1e-12) {
        throw NotUnitary("evolve_pair: ||U U^dag - I||_max = " + std::to_string(uerr));
    }

    const size_t d = rho.dim();
    const size_t bi = size_t{1} << (n - 1 - i);
    const size_t bj = size_t{1} << (n - 1 - j);
    auto local = [&](size_t k) { return ((k & bi) ? 2u : 0u) | ((k & bj) ? 1u : 0u); };
    auto with_local = [&](size_t k, size_t sub) {
        k &= ~(bi | bj);
        return k | ((sub & 2) ? bi : 0) | ((sub & 1) ? bj : 0);
    };
    auto U = u.data();
    auto src = rho.mat().data();

    // Rows: tmp = U_full * rho.
    std::vector<cplx> tmp(d * d);
    for (size_t r = 0; r < d; r++) {
        size_t lr = local(r);
        for (size_t m = 0; m < 4; m++) {
            cplx g = U[lr * 4 + m];
            if (g == cplx{}) {
                continue;
            }
            size_t src_row = with_local(r, m);
            for (size_t c = 0; c < d; c++) {
                tmp[r * d + c] += g * src[src_row * d + c];
            }
        }
    }
    // Columns: out = tmp * U_full^dag.
    ComplexMatrix out(d);
    auto dst = out.data();
    for (size_t c = 0; c < d; c++) {
        size_t lc = local(c);
        for (size_t m = 0; m < 4; m++) {
            cplx g = std::conj(U[lc * 4 + m]);
            if (g == cplx{}) {
                continue;
            }
            size_t src_col = with_local(c, m);
            for (size_t r = 0; r < d; r++) {
                dst[r * d + c] += tmp[r * d + src_col] * g;
            }
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix evolved_network(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p) {
    return evolve_pair(initial_network(pair1, pair2), propagator_matrix(p), 1, 2);
}

DensityMatrix evolved_network(const NetworkConfig &cfg, const DipolarParams &p) {
    cfg.validate();
    return evolved_network(cfg.pair1(), cfg.pair2(), p);
}

DensityMatrix eight_node_network(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p_inner,
                                 const DipolarParams &p_bridge) {
    DensityMatrix hop = evolved_network(pair1, pair2, p_inner);
    return evolve_pair(kron(hop, hop), propagator_matrix(p_bridge), 3, 4);
}

DensityMatrix eight_node_network(const NetworkConfig &cfg, const DipolarParams &p_inner,
                                 const DipolarParams &p_bridge) {
    cfg.validate();
    return eight_node_network(cfg.pair1(), cfg.pair2(), p_inner, p_bridge);
}

DensityMatrix extend_to_eight(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p_inner,
                              const DipolarParams &p_bridge) {
    return partial_trace(eight_node_network(pair1, pair2, p_inner, p_bridge), {0, 7});
}

DensityMatrix extend_to_eight(const NetworkConfig &cfg, const DipolarParams &p_inner, const DipolarParams &p_bridge) {
    cfg.validate();
    return extend_to_eight(cfg.pair1(), cfg.pair2(), p_inner, p_bridge);
}

}  // namespace dipnet
