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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dipnet/measures.h"
#include "dipnet/netmodel.h"
#include "test_util.h"

namespace dipnet {
namespace {

using testing::pure_from_bits;

DensityMatrix bell_singlet() {
    return x_state(XStateParams::singlet());
}

DensityMatrix werner(double x) {
    return x_state(XStateParams::werner(x));
}

DensityMatrix ghz() {
    return pure_from_bits({{"000", 1}, {"111", 1}});
}

DensityMatrix w_state() {
    return pure_from_bits({{"001", 1}, {"010", 1}, {"100", 1}});
}

DensityMatrix mixed(size_t n) {
    return DensityMatrix((1.0 / static_cast<double>(size_t{1} << n)) * ComplexMatrix::identity(size_t{1} << n));
}

TEST(Negativity, Anchors) {
    EXPECT_NEAR(negativity(bell_singlet()), 1, 1e-12);
    EXPECT_NEAR(negativity(pure_from_bits({{"00", 1}})), 0, 1e-12);
    // Frozen from tests/oracles/derive.py.
    EXPECT_NEAR(negativity(werner(0.5)), 0.25, 1e-12);
    EXPECT_NEAR(negativity(werner(1.0 / 3)), 0, 1e-12);
    EXPECT_THROW(negativity(mixed(3)), BadDimension);
}

TEST(Negativity, AgreesWithTraceNormPath) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; trial++) {
        DensityMatrix rho = trial % 2 ? testing::random_density(2, rng) : testing::random_pure(2, rng);
        double alt = std::max(0.0, trace_norm(partial_transpose(rho, {1})) - 1);
        ASSERT_NEAR(negativity(rho), alt, 1e-10);
    }
}

TEST(Negativity, TransposeSideIsIrrelevantForXStates) {
    XStateParams p{-0.7, -0.5, -0.3};
    DensityMatrix rho = x_state(p);
    auto ev0 = hermitian_eigenvalues(partial_transpose(rho, {0}));
    auto ev1 = hermitian_eigenvalues(partial_transpose(rho, {1}));
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(ev0[i], ev1[i], 1e-12);
    }
}

TEST(GlobalNegativity, Anchors) {
    for (size_t f = 0; f < 3; f++) {
        EXPECT_NEAR(global_negativity(pure_from_bits({{"000", 1}}), f), 0, 1e-12);
        EXPECT_NEAR(global_negativity(ghz(), f), 1, 1e-12);
    }
    // Frozen from tests/oracles/derive.py: 2 sqrt(2) / 3.
    EXPECT_NEAR(global_negativity(w_state(), 0), 0.942809041582064, 1e-12);
    EXPECT_THROW(global_negativity(ghz(), 3), BadSubsystem);
}

TEST(PairwiseNegativity, Anchors) {
    EXPECT_NEAR(pairwise_negativity(ghz(), 0, 1), 0, 1e-12);
    EXPECT_NEAR(pairwise_negativity(pure_from_bits({{"000", 1}}), 1, 2), 0, 1e-12);
    DensityMatrix singlet_zero = kron(bell_singlet(), pure_from_bits({{"0", 1}}));
    EXPECT_NEAR(pairwise_negativity(singlet_zero, 0, 1), 1, 1e-12);
    // Frozen from tests/oracles/derive.py: (sqrt 5 - 1) / 3.
    EXPECT_NEAR(pairwise_negativity(w_state(), 0, 1), 0.412022659166597, 1e-12);
    EXPECT_THROW(pairwise_negativity(ghz(), 1, 1), BadSubsystem);
}

TEST(PiTangle, Anchors) {
    TangleBreakdown g = pi_tangle(ghz());
    EXPECT_NEAR(g.pi, 1, 1e-12);
    EXPECT_NEAR(g.n_ab, 0, 1e-12);
    EXPECT_NEAR(pi_tangle(pure_from_bits({{"000", 1}})).pi, 0, 1e-12);
    TangleBreakdown w = pi_tangle(w_state());
    EXPECT_NEAR(w.pi, 0.549363545555463, 1e-12);
    EXPECT_DOUBLE_EQ(w.pi, (w.pi_a + w.pi_b + w.pi_c) / 3);
}

TEST(PiTangle, ProductStatesVanish) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; trial++) {
        DensityMatrix rho = kron(kron(testing::random_pure(1, rng), testing::random_pure(1, rng)),
                                 testing::random_pure(1, rng));
        EXPECT_NEAR(pi_tangle(rho).pi, 0, 1e-10);
    }
}

TEST(PiTangle, MonogamyOnRandomPureStates) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 1000; trial++) {
        DensityMatrix rho = testing::random_pure(3, rng);
        TangleBreakdown t = pi_tangle(rho);
        ASSERT_LE(t.n_ab * t.n_ab + t.n_ac * t.n_ac, t.n_a_bc * t.n_a_bc + 1e-9);
        ASSERT_LE(t.n_ab * t.n_ab + t.n_bc * t.n_bc, t.n_b_ac * t.n_b_ac + 1e-9);
        ASSERT_LE(t.n_ac * t.n_ac + t.n_bc * t.n_bc, t.n_c_ab * t.n_c_ab + 1e-9);
    }
}

TEST(L1Coherence, Anchors) {
    DensityMatrix half = mixed(1);
    DensityMatrix zero = pure_from_bits({{"0", 1}});
    for (Axis a : kAllAxes) {
        EXPECT_NEAR(l1_coherence(half, a), 0, 1e-15);
    }
    EXPECT_NEAR(l1_coherence(zero, Axis::z), 0, 1e-15);
    EXPECT_NEAR(l1_coherence(zero, Axis::x), 1, 1e-15);
    DensityMatrix px(0.5 * (ComplexMatrix::identity(2) + 0.6 * pauli::X()));
    EXPECT_NEAR(l1_coherence(px, Axis::y), 0.6, 1e-15);
    EXPECT_NEAR(l1_coherence(px, Axis::x), 0, 1e-15);
}

// l1 coherence in the sigma_j eigenbasis, by explicit basis rotation.
double l1_by_rotation(const DensityMatrix &rho, Axis axis) {
    EigenSystem es = hermitian_eigensystem(axis == Axis::x ? pauli::X() : axis == Axis::y ? pauli::Y() : pauli::Z());
    ComplexMatrix r = es.vectors.adjoint() * rho.mat() * es.vectors;
    return std::abs(r(0, 1)) + std::abs(r(1, 0));
}

TEST(L1Coherence, MatchesBasisRotation) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 100; trial++) {
        DensityMatrix rho = testing::random_density(1, rng);
        for (Axis a : kAllAxes) {
            ASSERT_NEAR(l1_coherence(rho, a), l1_by_rotation(rho, a), 1e-12);
        }
    }
}

TEST(ConditionalStates, Anchors) {
    MeasurementOutcome m = conditional_states(bell_singlet(), Axis::z, +1);
    EXPECT_NEAR(m.probability, 0.5, 1e-15);
    EXPECT_LT(max_abs_diff(m.conditional.mat(), pure_from_bits({{"1", 1}}).mat()), 1e-15);

    std::mt19937_64 rng(45);
    DensityMatrix ra = testing::random_density(1, rng);
    DensityMatrix rb = testing::random_density(1, rng);
    for (Axis a : kAllAxes) {
        for (int o : {+1, -1}) {
            MeasurementOutcome p = conditional_states(kron(ra, rb), a, o);
            EXPECT_LT(max_abs_diff(p.conditional.mat(), rb.mat()), 1e-14);
            MeasurementOutcome q = conditional_states(mixed(2), a, o);
            EXPECT_NEAR(q.probability, 0.5, 1e-15);
            EXPECT_LT(max_abs_diff(q.conditional.mat(), mixed(1).mat()), 1e-15);
        }
        double total = conditional_states(kron(ra, rb), a, +1).probability +
                       conditional_states(kron(ra, rb), a, -1).probability;
        EXPECT_NEAR(total, 1, 1e-12);
    }
    EXPECT_THROW(conditional_states(pure_from_bits({{"00", 1}}), Axis::z, -1), ZeroProbability);
    EXPECT_THROW(conditional_states(mixed(2), Axis::z, 0), std::invalid_argument);
}

TEST(Naqc, Anchors) {
    DensityMatrix bells[] = {
        pure_from_bits({{"00", 1}, {"11", 1}}),
        pure_from_bits({{"00", 1}, {"11", -1}}),
        pure_from_bits({{"01", 1}, {"10", 1}}),
        bell_singlet(),
    };
    for (const auto &b : bells) {
        EXPECT_NEAR(naqc_average(b), 3, 1e-12);
        EXPECT_NEAR(naqc_degree(b), 1, 1e-12);
    }
    EXPECT_NEAR(naqc_average(mixed(2)), 0, 1e-15);
    EXPECT_DOUBLE_EQ(naqc_degree(mixed(2)), 0);
    // Frozen from tests/oracles/derive.py.
    EXPECT_NEAR(naqc_average(werner(0.5)), 1.5, 1e-12);
    EXPECT_LT(naqc_average(werner(0.5)), std::sqrt(6));
    EXPECT_DOUBLE_EQ(naqc_degree(werner(0.5)), 0);
    EXPECT_NEAR(naqc_degree(werner(0.9)), 0.455051025721681, 1e-12);
    EXPECT_NEAR(kNaqcThreshold, std::sqrt(6.0), 1e-15);
}

TEST(Naqc, ZeroWeightBranchesAreSkipped) {
    // z measurement: the -1 branch has zero weight; the +1 branch leaves |0>.
    EXPECT_NEAR(naqc_average(pure_from_bits({{"00", 1}})), 2, 1e-12);
}

TEST(Naqc, InvariantUnderAxisPermutation) {
    // Cyclic relabeling x -> y -> z -> x on both qubits.
    ComplexMatrix v{{1, cplx(0, -1)}, {1, cplx(0, 1)}};
    v *= cplx(0.5, -0.5);
    ComplexMatrix vv = kron(v, v);
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 50; trial++) {
        DensityMatrix rho = testing::random_density(2, rng);
        ComplexMatrix rotated = vv * rho.mat() * vv.adjoint();
        DensityMatrix r2(0.5 * (rotated + rotated.adjoint()));
        ASSERT_NEAR(naqc_average(rho), naqc_average(r2), 1e-10);
    }
}

TEST(Naqc, DegreeBounds) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 500; trial++) {
        DensityMatrix rho = testing::random_pure(2, rng);
        double d = naqc_degree(rho);
        ASSERT_GE(d, 0);
        ASSERT_LE(d, 1 + 1e-12);
        ASSERT_EQ(d == 0, naqc_average(rho) <= kNaqcThreshold + 1e-12);
    }
}

TEST(EvolvedMeasures, FrozenValues) {
    // Frozen from tests/oracles/derive.py (scipy expm of the physical Hamiltonian).
    DensityMatrix rho = evolved_network(NetworkConfig{}, {0.1, 0.1});
    DensityMatrix r12 = partial_trace(rho, {0, 1});
    EXPECT_NEAR(negativity(r12), 0.879544129266272, 1e-11);
    EXPECT_NEAR(naqc_degree(r12), 0.562384645319023, 1e-11);
    EXPECT_NEAR(pi_tangle(partial_trace(rho, {0, 1, 2})).pi, 0.151700149667639, 1e-11);

    DensityMatrix ws = evolved_network(XStateParams::werner(0.7), XStateParams::singlet(), {-0.2, 0.2});
    EXPECT_NEAR(negativity(partial_trace(ws, {0, 1})), 0.213469464434470, 1e-11);
}

TEST(EvolvedMeasures, SymmetricNetworksHaveEqualOuterPairs) {
    for (NetworkConfig cfg : {NetworkConfig{NetworkKind::MM}, NetworkConfig{NetworkKind::WW, 0.8, 0.8}}) {
        for (double tau : {0.05, 0.3, 1.7, 4.4}) {
            DensityMatrix rho = evolved_network(cfg, {0.1, tau});
            EXPECT_NEAR(negativity(partial_trace(rho, {0, 1})), negativity(partial_trace(rho, {2, 3})), 1e-10);
        }
    }
}

}  // namespace
}  // namespace dipnet
