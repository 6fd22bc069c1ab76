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

#ifndef DIPNET_NETMODEL_H
#define DIPNET_NETMODEL_H

#include <array>
#include <string>
#include <string_view>

#include "dipnet/qmat.h"

namespace dipnet {

namespace pauli {
const ComplexMatrix &I2();
const ComplexMatrix &X();
const ComplexMatrix &Y();
const ComplexMatrix &Z();
}  // namespace pauli

/// Correlation triple of a Pauli-diagonal two-qubit state
/// rho = (I + a XX + b YY + c ZZ) / 4.
struct XStateParams {
    double a = 0;
    double b = 0;
    double c = 0;

    /// Weights of |phi+>, |phi->, |psi+>, |psi-> in the Bell decomposition.
    std::array<double, 4> bell_weights() const;
    bool is_positive(double tolerance = 1e-12) const;

    static XStateParams singlet() {
        return {-1, -1, -1};
    }
    /// x |psi-><psi-| + (1 - x) I / 4.
    static XStateParams werner(double x) {
        return {-x, -x, -x};
    }
};

/// Dimensionless dipolar parameters. The anisotropies are derived from
/// eps_tilde = eps / Delta and never stored.
struct DipolarParams {
    double eps_tilde = 0;
    double tau = 0;

    double kappa_x() const {
        return 1 - 3 * eps_tilde;
    }
    double kappa_y() const {
        return 1 + 3 * eps_tilde;
    }
    double kappa_z() const {
        return -2;
    }
};

struct PropagatorCoeffs {
    cplx r1, r2, r3, r4;
    double c1 = 1, c2 = 1, c3 = 1;
    double s1 = 0, s2 = 0, s3 = 0;

    double norm_sq() const;
};

enum class NetworkKind { MM, WW, MW };

std::string_view to_string(NetworkKind kind);
NetworkKind network_kind_from_string(std::string_view text);

inline constexpr double kDefaultWernerX = 0.7;

struct NetworkConfig {
    NetworkKind kind = NetworkKind::MM;
    double werner_x1 = kDefaultWernerX;
    double werner_x2 = kDefaultWernerX;

    /// Throws std::invalid_argument when a Werner parameter leaves [0, 1].
    void validate() const;
    XStateParams pair1() const;
    XStateParams pair2() const;
};

/// Matrix of the two-spin dipolar Hamiltonian in the basis {00, 01, 10, 11}.
ComplexMatrix dipolar_hamiltonian(double delta, double eps);

/// Propagator amplitudes at (tau, eps_tilde).
///
/// r3 carries the opposite sign to the usual printed expansion; with that sign
/// the assembled 4x4 propagator is unitary and equals
/// exp(-i tau (kx XX + ky YY + kz ZZ)).
PropagatorCoeffs propagator_coeffs(const DipolarParams &p);

/// Diagonal (r1+r4, r1-r4, r1-r4, r1+r4), corners r2+r3, inner block r2-r3.
ComplexMatrix propagator_matrix(const DipolarParams &p);

/// Physical time t at which exp(-i H(delta, eps_tilde*delta) t) equals the
/// propagator at tau. H = -(delta/12)(kx XX + ky YY + kz ZZ), hence t = -12 tau / delta.
double physical_time(double tau, double delta);
inline constexpr double kTauToDeltaTime = -12.0;

/// Throws NotPositive when a Bell weight is negative beyond 1e-12.
DensityMatrix x_state(const XStateParams &params);

/// rho_12 (x) rho_34 on four qubits.
DensityMatrix initial_network(const NetworkConfig &cfg);
DensityMatrix initial_network(const XStateParams &pair1, const XStateParams &pair2);

/// Applies u on qubits (i, j), i < j, with identity elsewhere; returns U rho U^dag.
DensityMatrix evolve_pair(const DensityMatrix &rho, const ComplexMatrix &u, size_t i, size_t j);

/// Four-node network after the dipolar interaction between nodes 2 and 3.
DensityMatrix evolved_network(const NetworkConfig &cfg, const DipolarParams &p);
DensityMatrix evolved_network(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p);

/// Two evolved four-node hops joined by a bridge interaction between node 4
/// of the first hop and node 1 of the second. Returns the 8-qubit state.
DensityMatrix eight_node_network(const NetworkConfig &cfg, const DipolarParams &p_inner,
                                 const DipolarParams &p_bridge);
DensityMatrix eight_node_network(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p_inner,
                                 const DipolarParams &p_bridge);

/// Terminal channel rho_18 of the eight-node network (dense path).
DensityMatrix extend_to_eight(const NetworkConfig &cfg, const DipolarParams &p_inner, const DipolarParams &p_bridge);
DensityMatrix extend_to_eight(const XStateParams &pair1, const XStateParams &pair2, const DipolarParams &p_inner,
                              const DipolarParams &p_bridge);

}  // namespace dipnet

#endif
