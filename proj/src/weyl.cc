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

#include "qpauli/weyl.h"

#include <stdexcept>
#include <string>

namespace qpauli {

namespace {

void require_in_range(int value, int d, const char *what) {
    if (value < 0 || value >= d) {
        throw std::invalid_argument(
            std::string(what) + " = " + std::to_string(value) + " out of range [0, " + std::to_string(d) + ")");
    }
}

}  // namespace

PauliIndex PauliIndex::make(int d, int l, int k) {
    require_dimension(d);
    require_in_range(l, d, "shift index l");
    require_in_range(k, d, "phase index k");
    return PauliIndex{d, l, k};
}

PauliIndex PauliIndex::reduced(int d, long long l, long long k) {
    return PauliIndex{d, mod_d(l, d), mod_d(k, d)};
}

ComplexMatrix shift_op(int d, int l) {
    require_dimension(d);
    require_in_range(l, d, "shift index l");
    ComplexMatrix m(d, d);
    for (int col = 0; col < d; col++) {
        m(mod_d(col + l, d), col) = 1;
    }
    return m;
}

ComplexMatrix phase_op(int d, int k) {
    require_dimension(d);
    require_in_range(k, d, "phase index k");
    ComplexMatrix m(d, d);
    for (int row = 0; row < d; row++) {
        m(row, row) = omega_pow(d, static_cast<long long>(row) * k);
    }
    return m;
}

ComplexMatrix pauli_op(const PauliIndex &idx) {
    auto [d, l, k] = PauliIndex::make(idx.d, idx.l, idx.k);
    ComplexMatrix m(d, d);
    for (int col = 0; col < d; col++) {
        m(mod_d(col + l, d), col) = omega_pow(d, static_cast<long long>(k) * col);
    }
    return m;
}

PauliCorrection pauli_inverse(const PauliIndex &idx) {
    auto checked = PauliIndex::make(idx.d, idx.l, idx.k);
    return PauliCorrection{mod_d(-checked.k, checked.d), mod_d(-checked.l, checked.d)};
}

ComplexMatrix correction_op(int d, const PauliCorrection &c) {
    return phase_op(d, c.zk) * shift_op(d, c.xl);
}

PauliCoefficients::PauliCoefficients(int d) : d_(d) {
    require_dimension(d);
    coeffs_.resize(static_cast<size_t>(d) * d);
}

PauliCoefficients::PauliCoefficients(int d, std::vector<Complex> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
    require_dimension(d);
    if (coeffs_.size() != static_cast<size_t>(d) * d) {
        throw std::invalid_argument(
            "expected " + std::to_string(d * d) + " Pauli coefficients, got " + std::to_string(coeffs_.size()));
    }
}

Complex &PauliCoefficients::at(int i, int j) {
    require_in_range(i, d_, "coefficient index i");
    require_in_range(j, d_, "coefficient index j");
    return coeffs_[static_cast<size_t>(i) * d_ + j];
}

const Complex &PauliCoefficients::at(int i, int j) const {
    require_in_range(i, d_, "coefficient index i");
    require_in_range(j, d_, "coefficient index j");
    return coeffs_[static_cast<size_t>(i) * d_ + j];
}

PauliCoefficients decompose(const ComplexMatrix &a, int d) {
    require_dimension(d);
    if (a.rows() != static_cast<size_t>(d) || a.cols() != static_cast<size_t>(d)) {
        throw std::invalid_argument(
            "decompose: expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix, got " +
            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    // E_{i,j} is nonzero only at (m + i, m) with value omega^{j m}, so
    // tr(E_{i,j}^dagger A) = sum_m omega^{-j m} A(m + i, m).
    PauliCoefficients out(d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            Complex acc{};
            for (int m = 0; m < d; m++) {
                acc += omega_pow(d, -static_cast<long long>(j) * m) * a(mod_d(m + i, d), m);
            }
            out.at(i, j) = acc / static_cast<double>(d);
        }
    }
    return out;
}

ComplexMatrix reconstruct(const PauliCoefficients &c) {
    int d = c.d();
    ComplexMatrix out(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            Complex xi = c.at(i, j);
            if (xi == Complex{}) {
                continue;
            }
            for (int m = 0; m < d; m++) {
                out(mod_d(m + i, d), m) += xi * omega_pow(d, static_cast<long long>(j) * m);
            }
        }
    }
    return out;
}

}  // namespace qpauli
