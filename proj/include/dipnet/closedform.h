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

#ifndef DIPNET_CLOSEDFORM_H
#define DIPNET_CLOSEDFORM_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dipnet/channel.h"
#include "dipnet/netmodel.h"

namespace dipnet {

/// Corrections applied on top of the literal transcription of the closed-form
/// reduced states. Production code uses kAllRepairs; the typo ledger switches
/// one repair off at a time to locate the coordinates it affects.
enum Repair : unsigned {
    kRepairNone = 0,
    /// The pair-coefficient table assigns A3 (and B3) twice; the second is A4 (B4).
    kRepairDuplicateA3B3 = 1u << 0,
    /// The rho_12 prefactor is 2*beta1, not 2*B1.
    kRepairRho12Prefactor = 1u << 1,
    /// The last ket-bra term of rho_234 repeats the previous coefficient.
    kRepairRho234FinalTerm = 1u << 2,
    /// |111><111| in rho_124 belongs to the first (diagonal) term.
    kRepairRho124MalformedTerm = 1u << 3,
    kAllRepairs = (1u << 4) - 1,
};

inline constexpr Repair kEachRepair[] = {kRepairDuplicateA3B3, kRepairRho12Prefactor, kRepairRho234FinalTerm,
                                         kRepairRho124MalformedTerm};

std::string_view repair_cause(Repair r);

/// Pair weights A (first pair) and B (second pair), their sums beta, and the
/// propagator entries gamma. Arrays are indexed from 0, so A[0] is A1.
struct ClosedFormCoefficients {
    std::array<double, 4> A{};
    std::array<double, 4> B{};
    double beta1 = 0.5;  // B1 + B2
    double beta2 = 0.5;  // A1 + A2
    /// gamma1 = r2 - r3 (inner block), gamma2 = r2 + r3 (corners),
    /// gamma3 = r1 - r4, gamma4 = r1 + r4.
    std::array<cplx, 4> gamma{};
    PropagatorCoeffs pc;
};

ClosedFormCoefficients coeffs(const XStateParams &pair1, const XStateParams &pair2, const PropagatorCoeffs &pc,
                              unsigned repairs = kAllRepairs);

/// M from the rho_14-type entries and N from the rho_23-type entries of a hop.
struct ExtensionCoefficients {
    double M11 = 0, M14 = 0, M22 = 0, M23 = 0;
    double M32 = 0, M33 = 0, M41 = 0, M44 = 0;
    double N11 = 0, N14 = 0, N22 = 0, N23 = 0;
    double N32 = 0, N33 = 0, N41 = 0, N44 = 0;
    double delta1 = 0, delta2 = 0, delta3 = 0, delta4 = 0, delta5 = 0;
};

/// `hop` supplies M and N; `bridge` supplies the propagator used in delta4/delta5.
ExtensionCoefficients extension_coeffs(const ClosedFormCoefficients &hop, const ClosedFormCoefficients &bridge,
                                       unsigned repairs = kAllRepairs);

/// Raw transcriptions. Unrepaired variants need not be valid density matrices.
ComplexMatrix rho12_matrix(const ClosedFormCoefficients &cf, unsigned repairs = kAllRepairs);
ComplexMatrix rho34_matrix(const ClosedFormCoefficients &cf, unsigned repairs = kAllRepairs);
ComplexMatrix rho14_matrix(const ClosedFormCoefficients &cf);
ComplexMatrix rho23_matrix(const ClosedFormCoefficients &cf);
ComplexMatrix rho123_matrix(const ClosedFormCoefficients &cf);
ComplexMatrix rho234_matrix(const ClosedFormCoefficients &cf, unsigned repairs = kAllRepairs);
ComplexMatrix rho124_matrix(const ClosedFormCoefficients &cf, unsigned repairs = kAllRepairs);
/// Before trace normalization; the trace is the normalization constant.
ComplexMatrix rho18_unnormalized(const ExtensionCoefficients &ext, const ClosedFormCoefficients &bridge);

DensityMatrix rho12_closed(const ClosedFormCoefficients &cf);
/// Mirror of rho_12 with the second pair's weights (the propagator is swap-symmetric).
DensityMatrix rho34_closed(const ClosedFormCoefficients &cf);
DensityMatrix rho14_closed(const ClosedFormCoefficients &cf);
DensityMatrix rho23_closed(const ClosedFormCoefficients &cf);
DensityMatrix rho123_closed(const ClosedFormCoefficients &cf);
DensityMatrix rho234_closed(const ClosedFormCoefficients &cf);
DensityMatrix rho124_closed(const ClosedFormCoefficients &cf);
DensityMatrix rho18_closed(const ExtensionCoefficients &ext, const ClosedFormCoefficients &bridge);

/// Closed-form state of a channel. Throws std::invalid_argument for C13/C24.
/// `p_bridge` is only used by C18.
DensityMatrix closed_channel(Channel ch, const XStateParams &pair1, const XStateParams &pair2,
                             const DipolarParams &p, const DipolarParams &p_bridge);

/// Dense-evolution state of a channel (ground truth).
DensityMatrix dense_channel(Channel ch, const XStateParams &pair1, const XStateParams &pair2,
                            const DipolarParams &p, const DipolarParams &p_bridge);

struct OracleComparison {
    double max_deviation = 0;
    size_t row = 0;
    size_t col = 0;
};

OracleComparison compare_with_oracle(const ComplexMatrix &closed, const ComplexMatrix &dense);

/// Computes both paths and throws OracleMismatch when they disagree beyond tol::kOracle.
DensityMatrix validated_channel(Channel ch, const XStateParams &pair1, const XStateParams &pair2,
                                const DipolarParams &p, const DipolarParams &p_bridge);

struct TypoLedgerEntry {
    Channel channel;
    size_t row = 0;
    size_t col = 0;
    cplx printed;
    cplx oracle;
    Repair cause;
};

/// Parameter point at which the ledger is evaluated: asymmetric pairs so that
/// every transcription slip changes at least one entry.
struct LedgerPoint {
    XStateParams pair1{-0.7, -0.5, -0.3};
    XStateParams pair2{-0.4, -0.7, -0.2};
    DipolarParams p{0.13, 0.9};
    DipolarParams p_bridge{-0.2, 1.7};
};

/// Every coordinate where the literal transcription (one repair disabled)
/// disagrees with the dense oracle.
std::vector<TypoLedgerEntry> typo_ledger(const LedgerPoint &point = {});

/// One line per entry: channel row col printed oracle cause.
std::string format_typo_ledger(const std::vector<TypoLedgerEntry> &entries);

}  // namespace dipnet

#endif
