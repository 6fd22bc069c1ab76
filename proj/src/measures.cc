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


#include "dipnet/measures.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "dipnet/netmodel.h"

namespace dipnet {

namespace {

constexpr double kClipGuard = 1e-12;
constexpr double kMinProbability = 1e-14;

void require_qubits(const DensityMatrix &rho, size_t n, const char *what) {
    if (rho.nqubits() != n) {
        throw BadDimension(std::string(what) + ": expected " + std::to_string(n) + " qubits, got " +
                           std::to_string(rho.nqubits()));
    }
}

double clip_at_zero(double v) {
    if (v < -kClipGuard) {
        return v;
    }
    return std::max(v, 0.0);
}

const ComplexMatrix &pauli_of(Axis axis) {
    switch (axis) {
        case Axis::x:
            return pauli::X();
        case Axis::y:
            return pauli::Y();
        case Axis::z:
            break;
    }
    return pauli::Z();
}

}  // namespace

std::string_view to_string(Axis axis) {
    switch (axis) {
        case Axis::x:
            return "x";
        case Axis::y:
            return "y";
        case Axis::z:
            return "z";
    }
    return "?";
}

double negativity(const DensityMatrix &rho) {
    require_qubits(rho, 2, "negativity");
    double sum = 0;
    for (double lambda : hermitian_eigenvalues(partial_transpose(rho, {1}))) {
        if (lambda < 0) {
            sum -= lambda;
        }
    }
    return 2 * sum;
}

double global_negativity(const DensityMatrix &rho3, size_t focus) {
    require_qubits(rho3, 3, "global_negativity");
    if (focus > 2) {
        throw BadSubsystem("global_negativity: focus " + std::to_string(focus) + " out of range");
    }
    return clip_at_zero(trace_norm(partial_transpose(rho3, {focus})) - 1);
}

double pairwise_negativity(const DensityMatrix &rho3, size_t i, size_t j) {
    require_qubits(rho3, 3, "pairwise_negativity");
    if (!(i < j && j < 3)) {
        throw BadSubsystem("pairwise_negativity: need i < j < 3");
    }
    DensityMatrix pair = partial_trace(rho3, {i, j});
    return clip_at_zero(trace_norm(partial_transpose(pair, {1})) - 1);
}

TangleBreakdown pi_tangle(const DensityMatrix &rho3) {
    TangleBreakdown t;
    t.n_a_bc = global_negativity(rho3, 0);
    t.n_b_ac = global_negativity(rho3, 1);
    t.n_c_ab = global_negativity(rho3, 2);
    t.n_ab = pairwise_negativity(rho3, 0, 1);
    t.n_ac = pairwise_negativity(rho3, 0, 2);
    t.n_bc = pairwise_negativity(rho3, 1, 2);
    t.pi_a = t.n_a_bc * t.n_a_bc - (t.n_ab * t.n_ab + t.n_ac * t.n_ac);
    t.pi_b = t.n_b_ac * t.n_b_ac - (t.n_ab * t.n_ab + t.n_bc * t.n_bc);
    t.pi_c = t.n_c_ab * t.n_c_ab - (t.n_ac * t.n_ac + t.n_bc * t.n_bc);
    t.pi = (t.pi_a + t.pi_b + t.pi_c) / 3;
    return t;
}

double l1_coherence(const DensityMatrix &rho1, Axis axis) {
    require_qubits(rho1, 1, "l1_coherence");
    // Off-diagonal of rho in the sigma_j eigenbasis has modulus |r_perp|/2,
    // where r_perp is the Bloch vector component orthogonal to axis j.
    double rx = 2 * rho1(0, 1).real();
    double ry = -2 * rho1(0, 1).imag();
    double rz = (rho1(0, 0) - rho1(1, 1)).real();
    switch (axis) {
        case Axis::x:
            return std::hypot(ry, rz);
        case Axis::y:
            return std::hypot(rx, rz);
        case Axis::z:
            break;
    }
    return std::hypot(rx, ry);
}

MeasurementOutcome conditional_states(const DensityMatrix &rho2, Axis axis, int outcome) {
    require_qubits(rho2, 2, "conditional_states");
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("conditional_states: outcome must be +1 or -1");
    }
    ComplexMatrix proj = 0.5 * (ComplexMatrix::identity(2) + cplx(outcome) * pauli_of(axis));
    ComplexMatrix p_full = kron(proj, ComplexMatrix::identity(2));
    ComplexMatrix projected = p_full * rho2.mat() * p_full;
    ComplexMatrix reduced(2);
    for (size_t a = 0; a < 2; a++) {
        for (size_t r = 0; r < 2; r++) {
            for (size_t c = 0; c < 2; c++) {
                reduced(r, c) += projected(2 * a + r, 2 * a + c);
            }
        }
    }
    double p = reduced.trace().real();
    if (p < kMinProbability) {
        throw ZeroProbability("conditional_states: branch " + std::string(to_string(axis)) +
                              (outcome > 0 ? "+" : "-") + " has probability " + std::to_string(p));
    }
    reduced *= 1.0 / p;
    return {axis, outcome, p, DensityMatrix(std::move(reduced))};
}

double naqc_average(const DensityMatrix &rho2) {
    double total = 0;
    for (Axis i : kAllAxes) {
        for (int a : {+1, -1}) {
            std::optional<MeasurementOutcome> m;
            try {
                m = conditional_states(rho2, i, a);
            } catch (const ZeroProbability &) {
                continue;
            }
            for (Axis j : kAllAxes) {
                if (j != i) {
                    total += m->probability * l1_coherence(m->conditional, j);
                }
            }
        }
    }
    return total / 2;
}

double naqc_degree(const DensityMatrix &rho2) {
    return std::max(0.0, (naqc_average(rho2) - kNaqcThreshold) / (kNaqcMax - kNaqcThreshold));
}

}  // namespace dipnet
