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


#ifndef DIPNET_MEASURES_H
#define DIPNET_MEASURES_H

#include <string_view>

#include "dipnet/qmat.h"

namespace dipnet {

enum class Axis { x, y, z };

inline constexpr Axis kAllAxes[] = {Axis::x, Axis::y, Axis::z};

std::string_view to_string(Axis axis);

/// Twice the summed magnitude of the negative eigenvalues of rho^{T_1}.
double negativity(const DensityMatrix &rho);

/// ||rho^{T_focus}||_1 - 1 on a three-qubit state.
double global_negativity(const DensityMatrix &rho3, size_t focus);

/// Traces out the third qubit, then ||rho_ij^{T_j}||_1 - 1.
double pairwise_negativity(const DensityMatrix &rho3, size_t i, size_t j);

struct TangleBreakdown {
    double n_a_bc = 0, n_b_ac = 0, n_c_ab = 0;
    double n_ab = 0, n_ac = 0, n_bc = 0;
    double pi_a = 0, pi_b = 0, pi_c = 0;
    double pi = 0;
};

TangleBreakdown pi_tangle(const DensityMatrix &rho3);

/// Sum of absolute off-diagonal entries in the eigenbasis of the given Pauli.
double l1_coherence(const DensityMatrix &rho1, Axis axis);

struct MeasurementOutcome {
    Axis axis = Axis::z;
    int outcome = +1;
    double probability = 0;
    DensityMatrix conditional{ComplexMatrix{{0.5, 0}, {0, 0.5}}};
};

/// Projective measurement of the Pauli `axis` on qubit 0 with eigenvalue
/// `outcome` (+1 or -1); returns the normalized state of qubit 1.
/// Throws ZeroProbability when the branch has p < 1e-14.
MeasurementOutcome conditional_states(const DensityMatrix &rho2, Axis axis, int outcome);

/// Steered-coherence average, at most 3 for two qubits.
double naqc_average(const DensityMatrix &rho2);

inline constexpr double kNaqcMax = 3.0;
/// Single-qubit bound sqrt(6).
inline constexpr double kNaqcThreshold = 2.449489742783178;

/// max(0, (naqc_average - sqrt 6) / (3 - sqrt 6)).
double naqc_degree(const DensityMatrix &rho2);

}  // namespace dipnet

#endif
