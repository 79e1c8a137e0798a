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

#ifndef QPAULI_WEYL_H
#define QPAULI_WEYL_H

#include <vector>

#include "qpauli/linalg.h"

namespace qpauli {

/// Label (l, k) of the generalized Pauli operator E_{l,k} = X_l Z_k on C^d.
///
/// l is the shift amount and k the phase amount, both in [0, d).
struct PauliIndex {
    int d;
    int l;
    int k;

    /// Validating constructor; throws std::invalid_argument when l or k is
    /// outside [0, d).
    static PauliIndex make(int d, int l, int k);
    /// Reduces l and k mod d first.
    static PauliIndex reduced(int d, long long l, long long k);

    bool operator==(const PauliIndex &) const = default;
};

/// X_l: |m> -> |m + l mod d>.
ComplexMatrix shift_op(int d, int l);
/// Z_k: |m> -> omega^{m k} |m>.
ComplexMatrix phase_op(int d, int k);
/// E_{l,k} = X_l Z_k, with E_{l,k} |m> = omega^{k m} |m + l>.
ComplexMatrix pauli_op(const PauliIndex &idx);

/// Exponents of the inverse (X_m Z_n)^-1 = Z_{-n mod d} X_{-m mod d}.
struct PauliCorrection {
    int zk;
    int xl;

    bool operator==(const PauliCorrection &) const = default;
};
PauliCorrection pauli_inverse(const PauliIndex &idx);
/// phase_op(d, zk) * shift_op(d, xl).
ComplexMatrix correction_op(int d, const PauliCorrection &c);

/// Coefficients xi_{i,j} of an operator in the E basis, stored at i * d + j.
class PauliCoefficients {
   public:
    /// All-zero coefficients.
    explicit PauliCoefficients(int d);
    PauliCoefficients(int d, std::vector<Complex> coeffs);

    int d() const {
        return d_;
    }
    Complex &at(int i, int j);
    const Complex &at(int i, int j) const;
    std::span<const Complex> coeffs() const {
        return coeffs_;
    }

   private:
    int d_;
    std::vector<Complex> coeffs_;
};

/// xi_{i,j} = tr(E_{i,j}^dagger A) / d. Throws if A is not d x d.
PauliCoefficients decompose(const ComplexMatrix &a, int d);
/// sum_{i,j} xi_{i,j} E_{i,j}.
ComplexMatrix reconstruct(const PauliCoefficients &c);

}  // namespace qpauli

#endif
