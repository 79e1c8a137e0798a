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

#include "qpauli/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qpauli {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(
            std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_same_dim(size_t a, size_t b, const char *op) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

void require_dimension(int d) {
    if (d < 1) {
        throw std::invalid_argument("dimension must be positive, got " + std::to_string(d));
    }
}

int mod_d(long long n, int d) {
    require_dimension(d);
    long long r = n % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

Complex omega(int d) {
    return omega_pow(d, 1);
}

Complex omega_pow(int d, long long n) {
    long long r = mod_d(n, d);
    if (r == 0) {
        return {1, 0};
    }
    if (2 * r == d) {
        return {-1, 0};
    }
    if (4 * r == d) {
        return {0, 1};
    }
    if (4 * r == 3LL * d) {
        return {0, -1};
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

double ComplexVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

StateVector StateVector::from_normalized(ComplexVector amps, double tol) {
    double n2 = amps.norm_squared();
    if (!(std::abs(n2 - 1.0) <= tol)) {
        throw std::invalid_argument("state vector is not normalized: norm^2 = " + std::to_string(n2));
    }
    return StateVector(std::move(amps));
}

StateVector StateVector::normalize(ComplexVector amps) {
    double n2 = amps.norm_squared();
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double scale = 1.0 / std::sqrt(n2);
    for (auto &a : amps.amps()) {
        a *= scale;
    }
    return StateVector(std::move(amps));
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument(
            "matrix entry count " + std::to_string(entries_.size()) + " does not match " + std::to_string(rows) +
            "x" + std::to_string(cols));
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector &ket, const ComplexVector &bra) {
    ComplexMatrix m(ket.dim(), bra.dim());
    for (size_t r = 0; r < ket.dim(); r++) {
        for (size_t c = 0; c < bra.dim(); c++) {
            m(r, c) = ket[r] * std::conj(bra[c]);
        }
    }
    return m;
}

StateVector basis_ket(int d, long long index) {
    require_dimension(d);
    if (index < 0 || index >= d) {
        throw std::invalid_argument(
            "basis index " + std::to_string(index) + " out of range for dimension " + std::to_string(d));
    }
    ComplexVector v(static_cast<size_t>(d));
    v[static_cast<size_t>(index)] = 1;
    return StateVector::from_normalized(std::move(v));
}

ComplexVector tensor(const ComplexVector &u, const ComplexVector &v) {
    ComplexVector out(u.dim() * v.dim());
    for (size_t a = 0; a < u.dim(); a++) {
        for (size_t b = 0; b < v.dim(); b++) {
            out[a * v.dim() + b] = u[a] * v[b];
        }
    }
    return out;
}

StateVector tensor(const StateVector &u, const StateVector &v) {
    return StateVector::from_normalized(tensor(u.vector(), v.vector()), kProtocolTol);
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Complex s = a(ar, ac);
            if (s == Complex{}) {
                continue;
            }
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "matmul: shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex s = a(r, k);
            if (s == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += s * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = s * a(r, c);
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "add");
    ComplexMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a + Complex{-1, 0} * b;
}

ComplexVector operator+(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a.dim(), b.dim(), "add");
    ComplexVector out = a;
    for (size_t i = 0; i < a.dim(); i++) {
        out[i] += b[i];
    }
    return out;
}

ComplexVector operator-(const ComplexVector &a, const ComplexVector &b) {
    return a + Complex{-1, 0} * b;
}

ComplexVector operator*(Complex s, const ComplexVector &a) {
    ComplexVector out = a;
    for (auto &x : out.amps()) {
        x *= s;
    }
    return out;
}

ComplexVector apply(const ComplexMatrix &a, const ComplexVector &v) {
    require_same_dim(a.cols(), v.dim(), "apply");
    ComplexVector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        Complex acc{};
        for (size_t c = 0; c < a.cols(); c++) {
            acc += a(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

StateVector apply(const ComplexMatrix &a, const StateVector &v) {
    ComplexVector out = apply(a, v.vector());
    if (!(std::abs(out.norm_squared() - 1.0) <= kProtocolTol)) {
        throw std::invalid_argument("apply: operator does not preserve the norm of this state");
    }
    return StateVector::normalize(std::move(out));
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Complex acc{};
    for (size_t i = 0; i < a.rows(); i++) {
        acc += a(i, i);
    }
    return acc;
}

Complex inner(const ComplexVector &u, const ComplexVector &v) {
    require_same_dim(u.dim(), v.dim(), "inner");
    Complex acc{};
    for (size_t i = 0; i < u.dim(); i++) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

Complex inner(const StateVector &u, const StateVector &v) {
    return inner(u.vector(), v.vector());
}

double fidelity(const StateVector &u, const StateVector &v) {
    return std::norm(inner(u, v));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    for (size_t i = 0; i < a.entries().size(); i++) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    return max_abs_diff(a.vector(), b.vector());
}

double max_abs_diff_up_to_phase(const StateVector &a, const StateVector &b) {
    Complex overlap = inner(b, a);
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1, 0};
    return max_abs_diff(a.vector(), phase * b.vector());
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        return false;
    }
    return max_abs_diff(dagger(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

StateVector random_state(int d, Rng &rng) {
    require_dimension(d);
    ComplexVector v(static_cast<size_t>(d));
    for (auto &a : v.amps()) {
        double re = rng.normal();
        double im = rng.normal();
        a = {re, im};
    }
    return StateVector::normalize(std::move(v));
}

StateVector random_state(int d, uint64_t seed) {
    Rng rng(seed);
    return random_state(d, rng);
}

ComplexMatrix random_matrix(size_t rows, size_t cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            double re = rng.normal();
            double im = rng.normal();
            m(r, c) = {re, im};
        }
    }
    return m;
}

ComplexMatrix random_unitary(size_t n, Rng &rng) {
    ComplexMatrix m = random_matrix(n, n, rng);
    for (size_t c = 0; c < n; c++) {
        for (size_t prev = 0; prev < c; prev++) {
            Complex proj{};
            for (size_t r = 0; r < n; r++) {
                proj += std::conj(m(r, prev)) * m(r, c);
            }
            for (size_t r = 0; r < n; r++) {
                m(r, c) -= proj * m(r, prev);
            }
        }
        double n2 = 0;
        for (size_t r = 0; r < n; r++) {
            n2 += std::norm(m(r, c));
        }
        double scale = 1.0 / std::sqrt(n2);
        for (size_t r = 0; r < n; r++) {
            m(r, c) *= scale;
        }
    }
    return m;
}

}  // namespace qpauli
