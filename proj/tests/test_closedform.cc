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

#include <random>
#include <set>

#include "dipnet/closedform.h"

namespace dipnet {
namespace {

const NetworkKind kKinds[] = {NetworkKind::MM, NetworkKind::WW, NetworkKind::MW};

double worst_deviation(Channel ch, const XStateParams &p1, const XStateParams &p2, const DipolarParams &p,
                       const DipolarParams &pb) {
    DensityMatrix closed = closed_channel(ch, p1, p2, p, pb);
    DensityMatrix dense = dense_channel(ch, p1, p2, p, pb);
    return compare_with_oracle(closed.mat(), dense.mat()).max_deviation;
}

TEST(ClosedForm, MatchesDenseForEveryNetwork) {
    for (NetworkKind kind : kKinds) {
        NetworkConfig cfg{kind, 0.7, 0.7};
        for (Channel ch : kAllChannels) {
            if (!has_closed_form(ch)) {
                continue;
            }
            for (double eps : {-0.2, 0.0, 0.1, 0.3}) {
                for (double tau : {0.0, 0.37, 1.9, 6.4}) {
                    DipolarParams p{eps, tau};
                    EXPECT_LT(worst_deviation(ch, cfg.pair1(), cfg.pair2(), p, p), tol::kOracle)
                        << to_string(kind) << " rho" << to_string(ch) << " eps=" << eps << " tau=" << tau;
                }
            }
        }
    }
}

TEST(ClosedForm, MatchesDenseAtRandomXStates) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1, 1);
    auto random_params = [&] {
        while (true) {
            XStateParams p{u(rng), u(rng), u(rng)};
            if (p.is_positive()) {
                return p;
            }
        }
    };
    for (int trial = 0; trial < 25; trial++) {
        XStateParams p1 = random_params();
        XStateParams p2 = random_params();
        DipolarParams p{0.5 * u(rng), 5 + 5 * u(rng)};
        DipolarParams pb{0.5 * u(rng), 5 + 5 * u(rng)};
        for (Channel ch : kAllChannels) {
            if (has_closed_form(ch)) {
                EXPECT_LT(worst_deviation(ch, p1, p2, p, pb), tol::kOracle) << "rho" << to_string(ch);
            }
        }
    }
}

TEST(ClosedForm, InitialMarginals) {
    XStateParams s = XStateParams::singlet();
    DipolarParams p{0.1, 0};
    DensityMatrix r12 = closed_channel(Channel::C12, s, s, p, p);
    EXPECT_LT(max_abs_diff(r12.mat(), x_state(s).mat()), 1e-15);
    for (Channel ch : {Channel::C14, Channel::C23, Channel::C18}) {
        EXPECT_LT(max_abs_diff(closed_channel(ch, s, s, p, p).mat(), 0.25 * ComplexMatrix::identity(4)), 1e-12);
    }
}

TEST(ClosedForm, CoefficientDefinitions) {
    XStateParams p1{-0.7, -0.5, -0.3};
    XStateParams p2{-0.4, -0.7, -0.2};
    PropagatorCoeffs pc = propagator_coeffs({0.13, 0.9});
    ClosedFormCoefficients cf = coeffs(p1, p2, pc);
    EXPECT_DOUBLE_EQ(cf.A[0], (1 - 0.3) / 4);
    EXPECT_DOUBLE_EQ(cf.A[1], (1 + 0.3) / 4);
    EXPECT_DOUBLE_EQ(cf.A[2], (-0.7 + 0.5) / 4);
    EXPECT_DOUBLE_EQ(cf.A[3], (-0.7 - 0.5) / 4);
    EXPECT_DOUBLE_EQ(cf.beta1, cf.B[0] + cf.B[1]);
    EXPECT_DOUBLE_EQ(cf.beta2, cf.A[0] + cf.A[1]);
    EXPECT_EQ(cf.gamma[0], pc.r2 - pc.r3);
    EXPECT_EQ(cf.gamma[3], pc.r1 + pc.r4);
    ClosedFormCoefficients literal = coeffs(p1, p2, pc, kAllRepairs & ~kRepairDuplicateA3B3);
    EXPECT_DOUBLE_EQ(literal.A[2], (-0.7 - 0.5) / 4);
    EXPECT_DOUBLE_EQ(literal.A[3], 0);
}

TEST(ClosedForm, ExtensionFeedsFromHop) {
    XStateParams s = XStateParams::singlet();
    ClosedFormCoefficients hop = coeffs(s, s, propagator_coeffs({0.1, 0.8}));
    ClosedFormCoefficients bridge = coeffs(s, s, propagator_coeffs({-0.2, 1.4}));
    ExtensionCoefficients e = extension_coeffs(hop, bridge);
    ComplexMatrix n = rho23_matrix(hop);
    auto g = [&](int i) { return std::norm(hop.gamma[i - 1]); };
    EXPECT_NEAR(e.N11, hop.beta2 * hop.beta1 * (g(2) + g(4)), 1e-15);
    EXPECT_NEAR(e.N11, n(0, 0).real(), 1e-15);
    EXPECT_NEAR(e.delta3, e.delta1 + e.delta2, 1e-15);
    ComplexMatrix m = rho14_matrix(hop);
    EXPECT_NEAR(e.M11, m(0, 0).real(), 1e-15);
    EXPECT_NEAR(e.M23, m(1, 2).real(), 1e-15);
}

TEST(ClosedForm, Rho18IsTraceNormalized) {
    XStateParams s = XStateParams::singlet();
    ClosedFormCoefficients hop = coeffs(s, s, propagator_coeffs({0.1, 0.8}));
    ClosedFormCoefficients bridge = coeffs(s, s, propagator_coeffs({0.1, 0.8}));
    ComplexMatrix raw = rho18_unnormalized(extension_coeffs(hop, bridge), bridge);
    EXPECT_GT(raw.trace().real(), 0);
    DensityMatrix r18 = rho18_closed(extension_coeffs(hop, bridge), bridge);
    EXPECT_NEAR(r18.mat().trace().real(), 1, 1e-12);
}

TEST(ClosedForm, DenseOnlyChannels) {
    XStateParams s = XStateParams::singlet();
    DipolarParams p{0.1, 1.0};
    EXPECT_THROW(closed_channel(Channel::C13, s, s, p, p), std::invalid_argument);
    EXPECT_THROW(closed_channel(Channel::C24, s, s, p, p), std::invalid_argument);
    DensityMatrix v = validated_channel(Channel::C13, s, s, p, p);
    EXPECT_LT(max_abs_diff(v.mat(), dense_channel(Channel::C13, s, s, p, p).mat()), 1e-15);
}

TEST(ClosedForm, ValidatedChannelReturnsClosed) {
    XStateParams s = XStateParams::singlet();
    DipolarParams p{0.3, 2.5};
    DensityMatrix v = validated_channel(Channel::C124, s, s, p, p);
    EXPECT_LT(max_abs_diff(v.mat(), closed_channel(Channel::C124, s, s, p, p).mat()), 1e-15);
}

TEST(ClosedForm, CompareReportsLocation) {
    ComplexMatrix a = ComplexMatrix::identity(4);
    ComplexMatrix b = a;
    b(2, 3) = 0.5;
    OracleComparison cmp = compare_with_oracle(a, b);
    EXPECT_DOUBLE_EQ(cmp.max_deviation, 0.5);
    EXPECT_EQ(cmp.row, 2u);
    EXPECT_EQ(cmp.col, 3u);
    EXPECT_THROW(compare_with_oracle(a, ComplexMatrix::identity(2)), BadDimension);
}

TEST(TypoLedger, EveryRepairIsNeededAndLocalized) {
    auto entries = typo_ledger();
    std::set<Repair> causes;
    std::set<std::pair<Channel, Repair>> seen;
    for (const auto &e : entries) {
        causes.insert(e.cause);
        seen.insert({e.channel, e.cause});
        EXPECT_GT(std::abs(e.printed - e.oracle), tol::kOracle);
    }
    EXPECT_EQ(causes.size(), std::size(kEachRepair));
    // The rho234 slip shows up in rho234 only; the rho124 slip in rho124 only.
    for (const auto &[ch, cause] : seen) {
        if (cause == kRepairRho234FinalTerm) {
            EXPECT_EQ(ch, Channel::C234);
        }
        if (cause == kRepairRho124MalformedTerm) {
            EXPECT_EQ(ch, Channel::C124);
        }
        if (cause == kRepairRho12Prefactor) {
            EXPECT_TRUE(ch == Channel::C12 || ch == Channel::C34);
        }
    }
    // The rho234 slip sits at |110><011| and its mirror.
    std::set<std::pair<size_t, size_t>> coords;
    for (const auto &e : entries) {
        if (e.cause == kRepairRho234FinalTerm) {
            coords.insert({e.row, e.col});
        }
    }
    EXPECT_EQ(coords, (std::set<std::pair<size_t, size_t>>{{6, 3}, {1, 4}}));
}

TEST(TypoLedger, Format) {
    std::string text = format_typo_ledger(typo_ledger());
    EXPECT_NE(text.find("rho234 6 3 "), std::string::npos);
    EXPECT_NE(text.find("duplicate-A3-B3"), std::string::npos);
}

}  // namespace
}  // namespace dipnet
