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

#ifndef QPAULI_LINALG_H
#define QPAULI_LINALG_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpauli/rng.h"

namespace qpauli {

using Complex = std::complex<double>;

/// Tolerance for algebraic identities (unitarity, trace orthogonality, ...).
inline constexpr double kAlgebraTol = 1e-12;
/// Tolerance for protocol outputs and state norms after evolution.
inline constexpr double kProtocolTol = 1e-10;

/// Throws std::invalid_argument unless d >= 1.
void require_dimension(int d);

/// Returns n reduced into [0, d).
int mod_d(long long n, int d);

/// exp(2*pi*i/d), the primitive d-th root of unity used throughout.
Complex omega(int d);

/// omega(d)^n. The exponent is reduced mod d first, and the multiples of a
/// quarter turn are returned exactly (so omega_pow(2, 1) is exactly -1).
Complex omega_pow(int d, long long n);

/// Amplitudes over a computational basis. No normalization invariant.
class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(size_t dim) : amps_(dim) {
    }
    explicit ComplexVector(std::vector<Complex> amps) : amps_(std::move(amps)) {
    }

    size_t dim() const {
        return amps_.size();
    }
    Complex &operator[](size_t i) {
        return amps_[i];
    }
    const Complex &operator[](size_t i) const {
        return amps_[i];
    }
    std::span<const Complex> amps() const {
        return amps_;
    }
    std::span<Complex> amps() {
        return amps_;
    }

    /// Sum of squared magnitudes.
    double norm_squared() const;

    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<Complex> amps_;
};

/// A unit-norm ComplexVector. Read-only after construction.
class StateVector {
   public:
    /// Wraps amplitudes that are already normalized; throws std::invalid_argument
    /// if |norm^2 - 1| exceeds tol.
    static StateVector from_normalized(ComplexVector amps, double tol = kAlgebraTol);
    /// Scales amplitudes to unit norm; throws on a zero (or non-finite) vector.
    static StateVector normalize(ComplexVector amps);

    size_t dim() const {
        return v_.dim();
    }
    const Complex &operator[](size_t i) const {
        return v_[i];
    }
    std::span<const Complex> amps() const {
        return v_.amps();
    }
    const ComplexVector &vector() const {
        return v_;
    }

   private:
    explicit StateVector(ComplexVector v) : v_(std::move(v)) {
    }
    ComplexVector v_;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    }
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(size_t n);
    /// |ket><bra| for two vectors (bra is conjugated).
    static ComplexMatrix outer(const ComplexVector &ket, const ComplexVector &bra);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// |index> in C^d. Throws std::invalid_argument if index is outside [0, d).
StateVector basis_ket(int d, long long index);

/// Kronecker products. Index of |a>|b> is a * dim(v) + b (left factor most significant).
ComplexVector tensor(const ComplexVector &u, const ComplexVector &v);
StateVector tensor(const StateVector &u, const StateVector &v);
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator+(const ComplexVector &a, const ComplexVector &b);
ComplexVector operator-(const ComplexVector &a, const ComplexVector &b);
ComplexVector operator*(Complex s, const ComplexVector &a);

ComplexVector apply(const ComplexMatrix &a, const ComplexVector &v);
/// Matrix action on a state. The matrix is expected to be unitary; the result
/// is renormalized only after checking its norm is within kProtocolTol of 1.
StateVector apply(const ComplexMatrix &a, const StateVector &v);

ComplexMatrix dagger(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);

/// sum_i conj(u_i) v_i.
Complex inner(const ComplexVector &u, const ComplexVector &v);
Complex inner(const StateVector &u, const StateVector &v);
/// |<u|v>|^2, insensitive to global phase.
double fidelity(const StateVector &u, const StateVector &v);

/// Largest entrywise |a - b|. Throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);
double max_abs_diff(const StateVector &a, const StateVector &b);
/// max_abs_diff(a, e^{i theta} b) at the theta that aligns b's phase with a.
double max_abs_diff_up_to_phase(const StateVector &a, const StateVector &b);

bool is_unitary(const ComplexMatrix &a, double tol = kAlgebraTol);

/// Standard-normal real and imaginary parts per amplitude, then normalized.
StateVector random_state(int d, Rng &rng);
/// Same, using a fresh Rng(seed).
StateVector random_state(int d, uint64_t seed);
/// Entries with standard-normal real and imaginary parts.
ComplexMatrix random_matrix(size_t rows, size_t cols, Rng &rng);
/// Modified Gram-Schmidt on the columns of random_matrix(n, n, rng).
ComplexMatrix random_unitary(size_t n, Rng &rng);

}  // namespace qpauli

#endif
