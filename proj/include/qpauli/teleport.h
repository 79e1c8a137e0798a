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

// Single-qudit teleportation.
//
// Register order for three qudits is (message, sender's Bell half, receiver's
// Bell half); flat index is q1 * d^2 + q2 * d + q3.
//
// Most operations come in two forms: a gate-level construction built from
// explicit matrices, and a closed form written directly in amplitudes. Tests
// hold them against each other.

#ifndef QPAULI_TELEPORT_H
#define QPAULI_TELEPORT_H

#include <optional>
#include <utility>
#include <vector>

#include "qpauli/linalg.h"
#include "qpauli/rng.h"

namespace qpauli {

/// Basis labels |A>|B> that seed the Bell pair.
struct BellLabel {
    int d;
    int A;
    int B;

    static BellLabel make(int d, int A, int B);

    bool operator==(const BellLabel &) const = default;
};

/// F|j> = d^{-1/2} sum_i omega^{i j} |i>.
ComplexMatrix fourier_op(int d);
/// |k>|l> -> |k>|l + k mod d>.
ComplexMatrix cnot_op(int d);
/// |k>|l> -> |k>|l - k mod d>.
ComplexMatrix cnot_inv_op(int d);

/// |beta_AB> = d^{-1/2} sum_x omega^{A x} |x>|B + x>.
StateVector bell_state(const BellLabel &lbl);
/// cnot * (F (x) I) * |A>|B>.
StateVector bell_state_circuit(const BellLabel &lbl);

/// Closed form of the three-qudit state just before measurement:
///     (1/d) sum_{y,z} omega^{A z} |y>|z> sum_a alpha_a omega^{a (y + A)} |B + z + a>.
StateVector protocol_state(const StateVector &psi, const BellLabel &lbl);
/// (F (x) I (x) I) * (cnot_inv (x) I) * (|psi> (x) |beta_AB>).
StateVector protocol_state_circuit(const StateVector &psi, const BellLabel &lbl);

/// Receiver's qudit for outcomes (M1, M2), as written without the branch's
/// global phase: sum_a alpha_a omega^{(A + M1) a} |B + M2 + a>.
StateVector branch_state(const StateVector &psi, const BellLabel &lbl, int M1, int M2);

/// Probability of each (M1, M2) outcome on qudits 1-2 of a d^3 state, indexed M1 * d + M2.
std::vector<double> outcome_probabilities(const StateVector &psi3, int d);
/// Normalized third-qudit state after projecting qudits 1-2 onto |M1>|M2>.
/// Throws if that outcome has zero probability.
StateVector project_outcome(const StateVector &psi3, int d, int M1, int M2);

struct Measurement {
    int M1;
    int M2;
    double probability;
    StateVector collapsed;
};
/// Samples (M1, M2) and returns the collapsed receiver state.
Measurement measure_M(const StateVector &psi3, int d, Rng &rng);
/// Forced-outcome variant; same collapse, no sampling.
Measurement measure_M(const StateVector &psi3, int d, int M1, int M2);

/// X_{-B-M2}.
ComplexMatrix shift_correction_op(const BellLabel &lbl, int M2);
/// Z_{-A-M1}.
ComplexMatrix phase_correction_op(const BellLabel &lbl, int M1);
/// X_{-B-M2} applied to the received state.
StateVector undo_shift(const StateVector &received, const BellLabel &lbl, int M2);
/// Z_{-A-M1} X_{-B-M2} applied to the received state.
StateVector correct(const StateVector &received, const BellLabel &lbl, int M1, int M2);

struct TeleportTranscript {
    int d;
    int A;
    int B;
    int M1;
    int M2;
    StateVector pre_correction;
    StateVector final_state;
    double fidelity_to_input;
};

/// Full protocol with sampled outcomes.
TeleportTranscript teleport(const StateVector &psi, const BellLabel &lbl, Rng &rng);
/// Full protocol with the outcomes fixed to (M1, M2).
TeleportTranscript teleport(const StateVector &psi, const BellLabel &lbl, int M1, int M2);

}  // namespace qpauli

#endif
