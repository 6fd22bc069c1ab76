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

#include "dipnet/closedform.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dipnet {

namespace {

// Ket-bra coordinate |row><col| on three qubits.
struct KetBra {
    int row;
    int col;
};

// coef = scale * (W[p] g_i g_j^* + W[q] g_k g_l^*), indices 1-based.
struct PairTerm {
    int p, i, j;
    int q, k, l;
    KetBra first;
    KetBra second;
};

// rho_123: scale beta1, weights A.
constexpr PairTerm kRho123Terms[] = {
    {2, 2, 2, 1, 4, 4, {0b000, 0b000}, {0b111, 0b111}}, {2, 4, 2, 1, 2, 4, {0b011, 0b000}, {0b100, 0b111}},
    {4, 3, 2, 3, 1, 4, {0b101, 0b000}, {0b010, 0b111}}, {4, 1, 2, 3, 3, 4, {0b110, 0b000}, {0b001, 0b111}},
    {2, 1, 1, 1, 3, 3, {0b001, 0b001}, {0b110, 0b110}}, {2, 3, 1, 1, 1, 3, {0b010, 0b001}, {0b101, 0b110}},
    {4, 4, 1, 3, 2, 3, {0b100, 0b001}, {0b011, 0b110}}, {4, 2, 1, 3, 4, 3, {0b111, 0b001}, {0b000, 0b110}},
    {1, 3, 1, 2, 1, 3, {0b001, 0b010}, {0b110, 0b101}}, {1, 1, 1, 2, 3, 3, {0b010, 0b010}, {0b101, 0b101}},
    {3, 2, 1, 4, 4, 3, {0b100, 0b010}, {0b011, 0b101}}, {3, 4, 1, 4, 2, 3, {0b111, 0b010}, {0b000, 0b101}},
    {1, 4, 2, 2, 2, 4, {0b000, 0b011}, {0b111, 0b100}}, {1, 2, 2, 2, 4, 4, {0b011, 0b011}, {0b100, 0b100}},
    {3, 1, 2, 4, 3, 4, {0b101, 0b011}, {0b010, 0b100}}, {3, 3, 2, 4, 1, 4, {0b110, 0b011}, {0b001, 0b100}},
};

// rho_234: scale beta2, weights B. The last entry is the printed (duplicated) term.
constexpr PairTerm kRho234Terms[] = {
    {2, 2, 2, 1, 4, 4, {0b000, 0b000}, {0b111, 0b111}}, {4, 1, 2, 3, 3, 4, {0b011, 0b000}, {0b100, 0b111}},
    {4, 3, 2, 3, 1, 4, {0b101, 0b000}, {0b010, 0b111}}, {2, 4, 2, 1, 2, 4, {0b110, 0b000}, {0b001, 0b111}},
    {1, 2, 2, 2, 4, 4, {0b001, 0b001}, {0b110, 0b110}}, {3, 1, 2, 4, 3, 4, {0b010, 0b001}, {0b101, 0b110}},
    {3, 3, 2, 4, 1, 4, {0b100, 0b001}, {0b011, 0b110}}, {1, 4, 2, 2, 2, 4, {0b111, 0b001}, {0b000, 0b110}},
    {3, 2, 1, 4, 4, 3, {0b001, 0b010}, {0b110, 0b101}}, {1, 1, 1, 2, 3, 3, {0b010, 0b010}, {0b101, 0b101}},
    {1, 3, 1, 2, 1, 3, {0b100, 0b010}, {0b011, 0b101}}, {3, 4, 1, 4, 2, 3, {0b111, 0b010}, {0b000, 0b101}},
    {4, 2, 1, 3, 4, 3, {0b000, 0b011}, {0b111, 0b100}}, {2, 1, 1, 1, 3, 3, {0b011, 0b011}, {0b100, 0b100}},
    {2, 3, 1, 1, 1, 3, {0b101, 0b011}, {0b010, 0b100}}, {2, 3, 1, 1, 1, 3, {0b110, 0b011}, {0b001, 0b100}},
};
constexpr PairTerm kRho234FinalTermRepaired = {3, 2, 3, 4, 4, 1, {0b110, 0b011}, {0b001, 0b100}};

// rho_124: coef = sum over four A[a] B[b] g_i g_j^*.
struct Product {
    int a, b, i, j;
};
struct QuadTerm {
    Product prods[4];
    KetBra kb[3];
    int nkb;
};

constexpr QuadTerm kRho124Terms[] = {
    {{{2, 1, 1, 1}, {2, 2, 2, 2}, {1, 2, 3, 3}, {1, 1, 4, 4}}, {{0b000, 0b000}}, 1},
    {{{2, 3, 4, 1}, {2, 4, 3, 2}, {1, 4, 2, 3}, {1, 3, 1, 4}}, {{0b011, 0b000}, {0b100, 0b111}, {0b111, 0b111}}, 3},
    {{{4, 3, 3, 1}, {4, 4, 4, 2}, {3, 4, 1, 3}, {3, 3, 2, 4}}, {{0b101, 0b000}, {0b010, 0b111}}, 2},
    {{{4, 1, 2, 1}, {4, 2, 1, 2}, {3, 2, 4, 3}, {3, 1, 3, 4}}, {{0b110, 0b000}, {0b001, 0b111}}, 2},
    {{{2, 2, 1, 1}, {2, 1, 2, 2}, {1, 1, 3, 3}, {1, 2, 4, 4}}, {{0b001, 0b001}, {0b110, 0b110}}, 2},
    {{{2, 4, 4, 1}, {2, 3, 3, 2}, {1, 3, 2, 3}, {1, 4, 1, 4}}, {{0b010, 0b001}, {0b101, 0b110}}, 2},
    {{{4, 4, 3, 1}, {4, 3, 4, 2}, {3, 3, 1, 3}, {3, 4, 2, 4}}, {{0b100, 0b001}, {0b011, 0b110}}, 2},
    {{{4, 2, 2, 1}, {4, 1, 1, 2}, {3, 1, 4, 3}, {3, 2, 3, 4}}, {{0b111, 0b001}, {0b000, 0b110}}, 2},
    {{{1, 4, 4, 1}, {1, 3, 3, 2}, {2, 3, 2, 3}, {2, 4, 1, 4}}, {{0b001, 0b010}, {0b110, 0b101}}, 2},
    {{{1, 2, 1, 1}, {1, 1, 2, 2}, {2, 1, 3, 3}, {2, 2, 4, 4}}, {{0b010, 0b010}, {0b101, 0b101}}, 2},
    {{{3, 2, 2, 1}, {3, 1, 1, 2}, {4, 1, 4, 3}, {4, 2, 3, 4}}, {{0b100, 0b010}, {0b011, 0b101}}, 2},
    {{{3, 4, 3, 1}, {3, 3, 4, 2}, {4, 3, 1, 3}, {4, 4, 2, 4}}, {{0b111, 0b010}, {0b000, 0b101}}, 2},
    {{{1, 3, 4, 1}, {1, 4, 3, 2}, {2, 4, 2, 3}, {2, 3, 1, 4}}, {{0b000, 0b011}, {0b111, 0b100}}, 2},
    {{{1, 1, 1, 1}, {1, 2, 2, 2}, {2, 2, 3, 3}, {2, 1, 4, 4}}, {{0b011, 0b011}, {0b100, 0b100}}, 2},
    {{{3, 1, 2, 1}, {3, 2, 1, 2}, {4, 2, 4, 3}, {4, 1, 3, 4}}, {{0b101, 0b011}, {0b010, 0b100}}, 2},
    {{{3, 3, 3, 1}, {3, 4, 4, 2}, {4, 4, 1, 3}, {4, 3, 2, 4}}, {{0b110, 0b011}, {0b001, 0b100}}, 2},
};

// Hermitian X-shaped 4x4 from its four independent entries.
ComplexMatrix x_shape(cplx d11, cplx d14, cplx d22, cplx d23) {
    return ComplexMatrix{
        {d11, 0, 0, d14},
        {0, d22, d23, 0},
        {0, d23, d22, 0},
        {d14, 0, 0, d11},
    };
}

// gamma_i gamma_j^*, 1-based.
inline cplx gg(const ClosedFormCoefficients &cf, int i, int j) {
    return cf.gamma[i - 1] * std::conj(cf.gamma[j - 1]);
}

ComplexMatrix assemble_pair_terms(std::span<const PairTerm> terms, const std::array<double, 4> &w, double scale,
                                  const ClosedFormCoefficients &cf) {
    ComplexMatrix m(8);
    for (const PairTerm &t : terms) {
        cplx v = scale * (w[t.p - 1] * gg(cf, t.i, t.j) + w[t.q - 1] * gg(cf, t.k, t.l));
        m(t.first.row, t.first.col) += v;
        m(t.second.row, t.second.col) += v;
    }
    return m;
}

// Two-node marginal on the nodes adjacent to the interaction, from one pair's weights.
ComplexMatrix pair_marginal(const std::array<double, 4> &w, double prefactor, const PropagatorCoeffs &pc) {
    double n1 = std::norm(pc.r1);
    double n2 = std::norm(pc.r2);
    double n3 = std::norm(pc.r3);
    double n4 = std::norm(pc.r4);
    double w1 = w[0], w2 = w[1], w3 = w[2], w4 = w[3];
    return x_shape(prefactor * (w1 * n1 + w2 * n2 + w2 * n3 + w1 * n4),
                   prefactor * (w3 * n1 + w4 * n2 - w4 * n3 - w3 * n4),
                   prefactor * (w2 * n1 + w1 * n2 + w1 * n3 + w2 * n4),
                   prefactor * (w4 * n1 + w3 * n2 - w3 * n3 - w4 * n4));
}

DensityMatrix as_state(ComplexMatrix m) {
    return DensityMatrix(std::move(m));
}

ClosedFormCoefficients coeffs_for(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p,
                                  unsigned repairs = kAllRepairs) {
    return coeffs(pair1, pair2, propagator_coeffs(p), repairs);
}

}  // namespace

std::string_view repair_cause(Repair r) {
    switch (r) {
        case kRepairDuplicateA3B3:
            return "duplicate-A3-B3";
        case kRepairRho12Prefactor:
            return "rho12-prefactor-2B1";
        case kRepairRho234FinalTerm:
            return "rho234-duplicated-final-term";
        case kRepairRho124MalformedTerm:
            return "rho124-malformed-term";
        default:
            return "none";
    }
}

ClosedFormCoefficients coeffs(const XStateParams &pair1, const XStateParams &pair2, const PropagatorCoeffs &pc,
                              unsigned repairs) {
    ClosedFormCoefficients cf;
    cf.A = {(pair1.c + 1) / 4, (1 - pair1.c) / 4, (pair1.a - pair1.b) / 4, (pair1.a + pair1.b) / 4};
    cf.B = {(pair2.c + 1) / 4, (1 - pair2.c) / 4, (pair2.a - pair2.b) / 4, (pair2.a + pair2.b) / 4};
    if (!(repairs & kRepairDuplicateA3B3)) {
        // Read literally: the second assignment overwrites A3 and A4 is never set.
        cf.A[2] = cf.A[3];
        cf.A[3] = 0;
        cf.B[2] = cf.B[3];
        cf.B[3] = 0;
    }
    cf.beta1 = cf.B[0] + cf.B[1];
    cf.beta2 = cf.A[0] + cf.A[1];
    cf.gamma = {pc.r2 - pc.r3, pc.r2 + pc.r3, pc.r1 - pc.r4, pc.r1 + pc.r4};
    cf.pc = pc;
    return cf;
}

ExtensionCoefficients extension_coeffs(const ClosedFormCoefficients &hop, const ClosedFormCoefficients &bridge,
                                       unsigned repairs) {
    (void)repairs;  // Repairs enter through `hop` (coefficients were built with them).
    ComplexMatrix m = rho14_matrix(hop);
    ComplexMatrix n = rho23_matrix(hop);
    ExtensionCoefficients e;
    e.M11 = m(0, 0).real();
    e.M14 = m(0, 3).real();
    e.M22 = m(1, 1).real();
    e.M23 = m(1, 2).real();
    e.M32 = e.M23;
    e.M33 = e.M22;
    e.M41 = e.M14;
    e.M44 = e.M11;
    e.N11 = n(0, 0).real();
    e.N14 = n(0, 3).real();
    e.N22 = n(1, 1).real();
    e.N23 = n(1, 2).real();
    e.N32 = e.N23;
    e.N33 = e.N22;
    e.N41 = e.N14;
    e.N44 = e.N11;

    auto G = [&](int i, int j) { return gg(bridge, i, j).real(); };
    const PropagatorCoeffs &pc = bridge.pc;
    double r_sum = std::norm(pc.r1) + std::norm(pc.r2) + std::norm(pc.r3) + std::norm(pc.r4);
    e.delta1 = e.N11 + e.N22;
    e.delta2 = e.N33 + e.N44;
    e.delta3 = e.N11 + e.N22 + e.N33 + e.N44;
    e.delta4 = (G(2, 2) + G(4, 4)) * e.M11 * e.M11 +
               e.M22 * ((G(1, 1) + G(3, 3)) * e.M22 + (G(2, 2) + G(4, 4)) * (e.M33 + e.M44)) +
               e.M11 * ((G(1, 1) + G(3, 3)) * (e.M33 + e.M44) + 2 * e.M22 * r_sum);
    e.delta5 = e.M11 * (G(1, 1) * e.M44 + G(2, 2) * e.M33 + G(3, 3) * e.M44 + G(4, 4) * e.M33) +
               e.M22 * (G(1, 1) * e.M44 + G(2, 2) * e.M33 + G(3, 3) * e.M44 + G(4, 4) * e.M33) +
               (e.M33 + e.M44) * (G(1, 1) * e.M33 + G(2, 2) * e.M44 + G(3, 3) * e.M33 + G(4, 4) * e.M44);
    return e;
}

ComplexMatrix rho12_matrix(const ClosedFormCoefficients &cf, unsigned repairs) {
    double prefactor = (repairs & kRepairRho12Prefactor) ? 2 * cf.beta1 : 2 * cf.B[0];
    return pair_marginal(cf.A, prefactor, cf.pc);
}

ComplexMatrix rho34_matrix(const ClosedFormCoefficients &cf, unsigned repairs) {
    double prefactor = (repairs & kRepairRho12Prefactor) ? 2 * cf.beta2 : 2 * cf.A[0];
    return pair_marginal(cf.B, prefactor, cf.pc);
}

ComplexMatrix rho14_matrix(const ClosedFormCoefficients &cf) {
    auto A = [&](int k) { return cf.A[k - 1]; };
    auto B = [&](int k) { return cf.B[k - 1]; };
    auto G = [&](int i, int j) { return gg(cf, i, j); };
    cplx d11 = A(1) * (B(2) * G(1, 1) + B(1) * G(2, 2) + B(2) * G(3, 3) + B(1) * G(4, 4)) +
               A(2) * (B(1) * G(1, 1) + B(2) * G(2, 2) + B(1) * G(3, 3) + B(2) * G(4, 4));
    cplx d14 = A(3) * (B(4) * G(3, 1) + B(3) * G(4, 2) + B(4) * G(1, 3) + B(3) * G(2, 4)) +
               A(4) * (B(3) * G(3, 1) + B(4) * G(4, 2) + B(3) * G(1, 3) + B(4) * G(2, 4));
    cplx d22 = A(2) * (B(2) * G(1, 1) + B(1) * G(2, 2) + B(2) * G(3, 3) + B(1) * G(4, 4)) +
               A(1) * (B(1) * G(1, 1) + B(2) * G(2, 2) + B(1) * G(3, 3) + B(2) * G(4, 4));
    cplx d23 = A(4) * (B(4) * G(3, 1) + B(3) * G(4, 2) + B(4) * G(1, 3) + B(3) * G(2, 4)) +
               A(3) * (B(3) * G(3, 1) + B(4) * G(4, 2) + B(3) * G(1, 3) + B(4) * G(2, 4));
    return x_shape(d11, d14, d22, d23);
}

ComplexMatrix rho23_matrix(const ClosedFormCoefficients &cf) {
    double w = cf.beta2 * cf.beta1;
    auto G = [&](int i, int j) { return gg(cf, i, j); };
    return x_shape(w * (G(2, 2) + G(4, 4)), w * (G(4, 2) + G(2, 4)), w * (G(1, 1) + G(3, 3)),
                   w * (G(3, 1) + G(1, 3)));
}

ComplexMatrix rho123_matrix(const ClosedFormCoefficients &cf) {
    return assemble_pair_terms(kRho123Terms, cf.A, cf.beta1, cf);
}

ComplexMatrix rho234_matrix(const ClosedFormCoefficients &cf, unsigned repairs) {
    std::array<PairTerm, 16> terms;
    std::copy(std::begin(kRho234Terms), std::end(kRho234Terms), terms.begin());
    if (repairs & kRepairRho234FinalTerm) {
        terms.back() = kRho234FinalTermRepaired;
    }
    return assemble_pair_terms(terms, cf.B, cf.beta2, cf);
}

ComplexMatrix rho124_matrix(const ClosedFormCoefficients &cf, unsigned repairs) {
    ComplexMatrix m(8);
    bool repaired = repairs & kRepairRho124MalformedTerm;
    cplx first_term_value = 0;
    for (size_t t = 0; t < std::size(kRho124Terms); t++) {
        const QuadTerm &term = kRho124Terms[t];
        cplx v = 0;
        for (const Product &p : term.prods) {
            v += cf.A[p.a - 1] * cf.B[p.b - 1] * gg(cf, p.i, p.j);
        }
        if (t == 0) {
            first_term_value = v;
        }
        for (int k = 0; k < term.nkb; k++) {
            const KetBra &kb = term.kb[k];
            if (repaired && t == 1 && kb.row == 0b111 && kb.col == 0b111) {
                continue;
            }
            m(kb.row, kb.col) += v;
        }
    }
    if (repaired) {
        m(0b111, 0b111) += first_term_value;
    }
    return m;
}

ComplexMatrix rho18_unnormalized(const ExtensionCoefficients &e, const ClosedFormCoefficients &bridge) {
    auto G = [&](int i, int j) { return gg(bridge, i, j); };
    cplx g11 = G(1, 1), g22 = G(2, 2), g33 = G(3, 3), g44 = G(4, 4);
    cplx g31 = G(3, 1), g42 = G(4, 2), g13 = G(1, 3), g24 = G(2, 4);
    double d = e.delta3 * e.delta3;

    ComplexMatrix m(4);
    m(0, 0) = d * ((g22 + g44) * e.M11 * e.M11 + (g11 + g33) * (e.M22 + e.M33) * e.M11 + (g22 + g44) * e.M22 * e.M33);
    m(0, 3) = d * ((g42 + g24) * e.M14 * e.M14 + (g31 + g13) * (e.M23 + e.M32) * e.M14 + (g42 + g24) * e.M23 * e.M32);
    m(1, 1) = d * (e.M11 * (g11 * e.M44 + g22 * e.M22 + g33 * e.M44 + g44 * e.M22) +
                   e.M22 * (g11 * e.M22 + g22 * e.M44 + g33 * e.M22 + g44 * e.M44));
    m(1, 2) = d * (e.M14 * (g31 * e.M41 + g42 * e.M23 + g13 * e.M41 + g24 * e.M23) +
                   e.M23 * (g31 * e.M23 + g42 * e.M41 + g13 * e.M23 + g24 * e.M41));
    m(2, 1) = d * (e.M14 * (g31 * e.M41 + g42 * e.M32 + g13 * e.M41 + g24 * e.M32) +
                   e.M32 * (g31 * e.M32 + g42 * e.M41 + g13 * e.M32 + g24 * e.M41));
    m(2, 2) = d * (e.M11 * (g11 * e.M44 + g22 * e.M33 + g33 * e.M44 + g44 * e.M33) +
                   e.M33 * (g11 * e.M33 + g22 * e.M44 + g33 * e.M33 + g44 * e.M44));
    m(3, 0) = d * (e.M23 * (g31 * e.M41 + g42 * e.M32 + g13 * e.M41 + g24 * e.M32) +
                   e.M41 * (g31 * e.M32 + g42 * e.M41 + g13 * e.M32 + g24 * e.M41));
    m(3, 3) = d * (e.M22 * (g11 * e.M44 + g22 * e.M33 + g33 * e.M44 + g44 * e.M33) +
                   e.M44 * (g11 * e.M33 + g22 * e.M44 + g33 * e.M33 + g44 * e.M44));
    return m;
}

DensityMatrix rho12_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho12_matrix(cf));
}
DensityMatrix rho34_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho34_matrix(cf));
}
DensityMatrix rho14_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho14_matrix(cf));
}
DensityMatrix rho23_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho23_matrix(cf));
}
DensityMatrix rho123_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho123_matrix(cf));
}
DensityMatrix rho234_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho234_matrix(cf));
}
DensityMatrix rho124_closed(const ClosedFormCoefficients &cf) {
    return as_state(rho124_matrix(cf));
}

DensityMatrix rho18_closed(const ExtensionCoefficients &ext, const ClosedFormCoefficients &bridge) {
    ComplexMatrix m = rho18_unnormalized(ext, bridge);
    cplx norm = m.trace();
    if (std::abs(norm) < 1e-300) {
        throw Error("rho18_closed: vanishing normalization");
    }
    m *= 1.0 / norm;
    return as_state(std::move(m));
}

DensityMatrix closed_channel(Channel ch, const XStateParams &pair1, const XStateParams &pair2,
                             const DipolarParams &p, const DipolarParams &p_bridge) {
    ClosedFormCoefficients cf = coeffs_for(pair1, pair2, p);
    switch (ch) {
        case Channel::C12:
            return rho12_closed(cf);
        case Channel::C34:
            return rho34_closed(cf);
        case Channel::C14:
            return rho14_closed(cf);
        case Channel::C23:
            return rho23_closed(cf);
        case Channel::C123:
            return rho123_closed(cf);
        case Channel::C234:
            return rho234_closed(cf);
        case Channel::C124:
            return rho124_closed(cf);
        case Channel::C18: {
            ClosedFormCoefficients bridge = coeffs_for(pair1, pair2, p_bridge);
            return rho18_closed(extension_coeffs(cf, bridge), bridge);
        }
        case Channel::C13:
        case Channel::C24:
            break;
    }
    throw std::invalid_argument("no closed form for channel " + std::string(to_string(ch)));
}

DensityMatrix dense_channel(Channel ch, const XStateParams &pair1, const XStateParams &pair2,
                            const DipolarParams &p, const DipolarParams &p_bridge) {
    if (ch == Channel::C18) {
        return extend_to_eight(pair1, pair2, p, p_bridge);
    }
    return partial_trace(evolved_network(pair1, pair2, p), channel_qubits(ch));
}

OracleComparison compare_with_oracle(const ComplexMatrix &closed, const ComplexMatrix &dense) {
    if (closed.dim() != dense.dim()) {
        throw BadDimension("compare_with_oracle: dimension mismatch");
    }
    OracleComparison out;
    for (size_t r = 0; r < closed.dim(); r++) {
        for (size_t c = 0; c < closed.dim(); c++) {
            double dev = std::abs(closed(r, c) - dense(r, c));
            if (dev > out.max_deviation) {
                out = {dev, r, c};
            }
        }
    }
    return out;
}

DensityMatrix validated_channel(Channel ch, const XStateParams &pair1, const XStateParams &pair2,
                                const DipolarParams &p, const DipolarParams &p_bridge) {
    DensityMatrix dense = dense_channel(ch, pair1, pair2, p, p_bridge);
    if (!has_closed_form(ch)) {
        return dense;
    }
    DensityMatrix closed = closed_channel(ch, pair1, pair2, p, p_bridge);
    OracleComparison cmp = compare_with_oracle(closed.mat(), dense.mat());
    if (cmp.max_deviation > tol::kOracle) {
        std::ostringstream msg;
        msg << "closed form of rho" << to_string(ch) << " deviates from the dense oracle by " << cmp.max_deviation
            << " at (" << cmp.row << ", " << cmp.col << "), tau=" << p.tau << " eps_tilde=" << p.eps_tilde;
        throw OracleMismatch(msg.str());
    }
    return closed;
}

std::vector<TypoLedgerEntry> typo_ledger(const LedgerPoint &pt) {
    std::vector<TypoLedgerEntry> out;
    const Channel channels[] = {Channel::C12, Channel::C34,  Channel::C14,  Channel::C23,
                                Channel::C123, Channel::C234, Channel::C124, Channel::C18};
    for (Channel ch : channels) {
        ComplexMatrix dense = dense_channel(ch, pt.pair1, pt.pair2, pt.p, pt.p_bridge).mat();
        for (Repair r : kEachRepair) {
            unsigned repairs = kAllRepairs & ~static_cast<unsigned>(r);
            ClosedFormCoefficients cf = coeffs_for(pt.pair1, pt.pair2, pt.p, repairs);
            ComplexMatrix printed(dense.dim());
            switch (ch) {
                case Channel::C12:
                    printed = rho12_matrix(cf, repairs);
                    break;
                case Channel::C34:
                    printed = rho34_matrix(cf, repairs);
                    break;
                case Channel::C14:
                    printed = rho14_matrix(cf);
                    break;
                case Channel::C23:
                    printed = rho23_matrix(cf);
                    break;
                case Channel::C123:
                    printed = rho123_matrix(cf);
                    break;
                case Channel::C234:
                    printed = rho234_matrix(cf, repairs);
                    break;
                case Channel::C124:
                    printed = rho124_matrix(cf, repairs);
                    break;
                case Channel::C18: {
                    ClosedFormCoefficients bridge = coeffs_for(pt.pair1, pt.pair2, pt.p_bridge, repairs);
                    printed = rho18_unnormalized(extension_coeffs(cf, bridge, repairs), bridge);
                    printed *= 1.0 / printed.trace();
                    break;
                }
                default:
                    continue;
            }
            for (size_t row = 0; row < dense.dim(); row++) {
                for (size_t col = 0; col < dense.dim(); col++) {
                    if (std::abs(printed(row, col) - dense(row, col)) > tol::kOracle) {
                        out.push_back({ch, row, col, printed(row, col), dense(row, col), r});
                    }
                }
            }
        }
    }
    return out;
}

std::string format_typo_ledger(const std::vector<TypoLedgerEntry> &entries) {
    std::string out;
    char buf[256];
    for (const auto &e : entries) {
        std::snprintf(buf, sizeof(buf), "rho%s %zu %zu %.12g%+.12gi %.12g%+.12gi %s\n",
                      std::string(to_string(e.channel)).c_str(), e.row, e.col, e.printed.real(), e.printed.imag(),
                      e.oracle.real(), e.oracle.imag(), std::string(repair_cause(e.cause)).c_str());
        out += buf;
    }
    return out;
}

}  // namespace dipnet
