// Copyright 2026 The QuditPauli Authors
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

#include "qpauli/teleport.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpauli/weyl.h"

namespace qpauli {

namespace {

void require_label(int value, int d, const char *what) {
    if (value < 0 || value >= d) {
        throw std::invalid_argument(
            std::string(what) + " = " + std::to_string(value) + " out of range [0, " + std::to_string(d) + ")");
    }
}

void require_message(const StateVector &psi, int d) {
    if (psi.dim() != static_cast<size_t>(d)) {
        throw std::invalid_argument(
            "message state has dimension " + std::to_string(psi.dim()) + ", expected " + std::to_string(d));
    }
}

void require_register(const StateVector &psi3, int d) {
    require_dimension(d);
    if (psi3.dim() != static_cast<size_t>(d) * d * d) {
        throw std::invalid_argument("three-qudit state must have dimension d^3");
    }
}

size_t idx3(int d, int q1, int q2, int q3) {
    return (static_cast<size_t>(q1) * d + q2) * d + q3;
}

ComplexMatrix controlled_add(int d, int sign) {
    require_dimension(d);
    size_t dd = static_cast<size_t>(d) * d;
    ComplexMatrix m(dd, dd);
    for (int k = 0; k < d; k++) {
        for (int l = 0; l < d; l++) {
            m(static_cast<size_t>(k) * d + mod_d(l + sign * k, d), static_cast<size_t>(k) * d + l) = 1;
        }
    }
    return m;
}

}  // namespace

BellLabel BellLabel::make(int d, int A, int B) {
    require_dimension(d);
    require_label(A, d, "A");
    require_label(B, d, "B");
    return BellLabel{d, A, B};
}

ComplexMatrix fourier_op(int d) {
    require_dimension(d);
    ComplexMatrix m(d, d);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(i, j) = omega_pow(d, static_cast<long long>(i) * j) * scale;
        }
    }
    return m;
}

ComplexMatrix cnot_op(int d) {
    return controlled_add(d, +1);
}

ComplexMatrix cnot_inv_op(int d) {
    return controlled_add(d, -1);
}

StateVector bell_state(const BellLabel &lbl) {
    auto [d, A, B] = BellLabel::make(lbl.d, lbl.A, lbl.B);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexVector v(static_cast<size_t>(d) * d);
    for (int x = 0; x < d; x++) {
        v[static_cast<size_t>(x) * d + mod_d(B + x, d)] = omega_pow(d, static_cast<long long>(A) * x) * scale;
    }
    return StateVector::from_normalized(std::move(v), kProtocolTol);
}

StateVector bell_state_circuit(const BellLabel &lbl) {
    auto [d, A, B] = BellLabel::make(lbl.d, lbl.A, lbl.B);
    StateVector start = tensor(basis_ket(d, A), basis_ket(d, B));
    ComplexMatrix circuit = cnot_op(d) * tensor(fourier_op(d), ComplexMatrix::identity(d));
    return apply(circuit, start);
}

StateVector protocol_state(const StateVector &psi, const BellLabel &lbl) {
    auto [d, A, B] = BellLabel::make(lbl.d, lbl.A, lbl.B);
    require_message(psi, d);
    ComplexVector v(static_cast<size_t>(d) * d * d);
    for (int y = 0; y < d; y++) {
        for (int z = 0; z < d; z++) {
            Complex branch_phase = omega_pow(d, static_cast<long long>(A) * z) / static_cast<double>(d);
            for (int a = 0; a < d; a++) {
                v[idx3(d, y, z, mod_d(B + z + a, d))] +=
                    branch_phase * psi[a] * omega_pow(d, static_cast<long long>(a) * (y + A));
            }
        }
    }
    return StateVector::from_normalized(std::move(v), kProtocolTol);
}

StateVector protocol_state_circuit(const StateVector &psi, const BellLabel &lbl) {
    auto [d, A, B] = BellLabel::make(lbl.d, lbl.A, lbl.B);
    require_message(psi, d);
    ComplexMatrix id = ComplexMatrix::identity(d);
    StateVector joint = tensor(psi, bell_state(lbl));
    joint = apply(tensor(cnot_inv_op(d), id), joint);
    return apply(tensor(tensor(fourier_op(d), id), id), joint);
}

StateVector branch_state(const StateVector &psi, const BellLabel &lbl, int M1, int M2) {
    auto [d, A, B] = BellLabel::make(lbl.d, lbl.A, lbl.B);
    require_message(psi, d);
    require_label(M1, d, "M1");
    require_label(M2, d, "M2");
    ComplexVector v(static_cast<size_t>(d));
    for (int a = 0; a < d; a++) {
        v[mod_d(B + M2 + a, d)] = psi[a] * omega_pow(d, static_cast<long long>(A + M1) * a);
    }
    return StateVector::from_normalized(std::move(v), kProtocolTol);
}

std::vector<double> outcome_probabilities(const StateVector &psi3, int d) {
    require_register(psi3, d);
    std::vector<double> probs(static_cast<size_t>(d) * d);
    for (int m1 = 0; m1 < d; m1++) {
        for (int m2 = 0; m2 < d; m2++) {
            double p = 0;
            for (int q = 0; q < d; q++) {
                p += std::norm(psi3[idx3(d, m1, m2, q)]);
            }
            probs[static_cast<size_t>(m1) * d + m2] = p;
        }
    }
    return probs;
}

StateVector project_outcome(const StateVector &psi3, int d, int M1, int M2) {
    require_register(psi3, d);
    require_label(M1, d, "M1");
    require_label(M2, d, "M2");
    ComplexVector v(static_cast<size_t>(d));
    for (int q = 0; q < d; q++) {
        v[q] = psi3[idx3(d, M1, M2, q)];
    }
    if (v.norm_squared() == 0) {
        throw std::invalid_argument("measurement outcome has zero probability");
    }
    return StateVector::normalize(std::move(v));
}

Measurement measure_M(const StateVector &psi3, int d, Rng &rng) {
    auto probs = outcome_probabilities(psi3, d);
    size_t pick = sample_index(probs, rng);
    int m1 = static_cast<int>(pick) / d;
    int m2 = static_cast<int>(pick) % d;
    return Measurement{m1, m2, probs[pick], project_outcome(psi3, d, m1, m2)};
}

Measurement measure_M(const StateVector &psi3, int d, int M1, int M2) {
    StateVector collapsed = project_outcome(psi3, d, M1, M2);
    double p = outcome_probabilities(psi3, d)[static_cast<size_t>(M1) * d + M2];
    return Measurement{M1, M2, p, std::move(collapsed)};
}

ComplexMatrix shift_correction_op(const BellLabel &lbl, int M2) {
    return shift_op(lbl.d, mod_d(-static_cast<long long>(lbl.B) - M2, lbl.d));
}

ComplexMatrix phase_correction_op(const BellLabel &lbl, int M1) {
    return phase_op(lbl.d, mod_d(-static_cast<long long>(lbl.A) - M1, lbl.d));
}

StateVector undo_shift(const StateVector &received, const BellLabel &lbl, int M2) {
    require_label(M2, lbl.d, "M2");
    return apply(shift_correction_op(lbl, M2), received);
}

StateVector correct(const StateVector &received, const BellLabel &lbl, int M1, int M2) {
    require_label(M1, lbl.d, "M1");
    return apply(phase_correction_op(lbl, M1), undo_shift(received, lbl, M2));
}

namespace {

TeleportTranscript finish(const StateVector &psi, const BellLabel &lbl, Measurement m) {
    StateVector fixed = correct(m.collapsed, lbl, m.M1, m.M2);
    double f = fidelity(fixed, psi);
    return TeleportTranscript{lbl.d, lbl.A, lbl.B, m.M1, m.M2, std::move(m.collapsed), std::move(fixed), f};
}

}  // namespace

TeleportTranscript teleport(const StateVector &psi, const BellLabel &lbl, Rng &rng) {
    StateVector psi3 = protocol_state_circuit(psi, lbl);
    return finish(psi, lbl, measure_M(psi3, lbl.d, rng));
}

TeleportTranscript teleport(const StateVector &psi, const BellLabel &lbl, int M1, int M2) {
    StateVector psi3 = protocol_state_circuit(psi, lbl);
    return finish(psi, lbl, measure_M(psi3, lbl.d, M1, M2));
}

}  // namespace qpauli
