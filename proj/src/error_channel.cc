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

#include "qpauli/error_channel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpauli {

namespace {

size_t flat_index(int d, int row, int col) {
    return static_cast<size_t>(row) * d + col;
}

void require_valid(const GammaTable &g) {
    if (auto v = validate_gamma(g)) {
        throw std::invalid_argument(v->describe());
    }
}

}  // namespace

GammaTable::GammaTable(int d) : d_(d) {
    require_dimension(d);
    entries_.resize(static_cast<size_t>(d) * d);
}

GammaTable::GammaTable(int d, std::vector<Complex> row_major) : d_(d), entries_(std::move(row_major)) {
    require_dimension(d);
    if (entries_.size() != static_cast<size_t>(d) * d) {
        throw std::invalid_argument("gamma table needs " + std::to_string(d * d) + " entries");
    }
}

GammaTable GammaTable::identity(int d) {
    GammaTable g(d);
    for (int a = 0; a < d; a++) {
        g.at(a, a) = 1;
    }
    return g;
}

GammaTable GammaTable::random(int d, Rng &rng) {
    GammaTable g(d);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            double re = rng.normal();
            double im = rng.normal();
            g.at(a, b) = {re, im};
        }
    }
    for (int b = 0; b < d; b++) {
        double n2 = 0;
        for (int a = 0; a < d; a++) {
            n2 += std::norm(g.at(a, b));
        }
        double scale = 1.0 / std::sqrt(n2);
        for (int a = 0; a < d; a++) {
            g.at(a, b) *= scale;
        }
    }
    return g;
}

Complex &GammaTable::at(int a, int b) {
    return entries_.at(flat_index(d_, a, b));
}

const Complex &GammaTable::at(int a, int b) const {
    return entries_.at(flat_index(d_, a, b));
}

std::string GammaViolation::describe() const {
    return "gamma column " + std::to_string(column) + " has squared norm " + std::to_string(column_norm_squared) +
           ", expected 1";
}

std::optional<GammaViolation> validate_gamma(const GammaTable &g) {
    for (int b = 0; b < g.d(); b++) {
        double n2 = 0;
        for (int a = 0; a < g.d(); a++) {
            n2 += std::norm(g.at(a, b));
        }
        if (!(std::abs(n2 - 1.0) <= kGammaTol)) {
            return GammaViolation{b, n2};
        }
    }
    return std::nullopt;
}

ErrorWeights::ErrorWeights(int d, std::vector<double> row_major) : d_(d), p_(std::move(row_major)) {
    require_dimension(d);
    if (p_.size() != static_cast<size_t>(d) * d) {
        throw std::invalid_argument("error weights need " + std::to_string(d * d) + " entries");
    }
    for (double p : p_) {
        if (!(p >= 0) || !std::isfinite(p)) {
            throw std::invalid_argument("error weights must be finite and non-negative");
        }
    }
    if (!(std::abs(sum() - 1.0) <= kProtocolTol)) {
        throw std::invalid_argument("error weights sum to " + std::to_string(sum()) + ", expected 1");
    }
}

double ErrorWeights::at(int l, int k) const {
    return p_.at(flat_index(d_, l, k));
}

double ErrorWeights::sum() const {
    double total = 0;
    for (double p : p_) {
        total += p;
    }
    return total;
}

JointState::JointState(int d, StateVector amps) : d_(d), amps_(std::move(amps)) {
    require_dimension(d);
    if (amps_.dim() != static_cast<size_t>(d) * d * d) {
        throw std::invalid_argument("joint state must have dimension d^3");
    }
}

Complex JointState::amplitude(int s, int a, int b) const {
    size_t dd = static_cast<size_t>(d_) * d_;
    return amps_[static_cast<size_t>(s) * dd + flat_index(d_, a, b)];
}

JointState evolve_joint(const StateVector &psi, const GammaTable &g) {
    require_valid(g);
    int d = g.d();
    if (psi.dim() != static_cast<size_t>(d)) {
        throw std::invalid_argument("evolve_joint: state dimension does not match gamma table");
    }
    size_t dd = static_cast<size_t>(d) * d;
    ComplexVector out(dd * d);
    for (int i = 0; i < d; i++) {
        int b = mod_d(-i, d);
        for (int l = 0; l < d; l++) {
            int s = mod_d(i + l, d);
            int a = mod_d(-i + l, d);
            out[s * dd + flat_index(d, a, b)] += psi[i] * g.at(a, b);
        }
    }
    return JointState(d, StateVector::from_normalized(std::move(out), kProtocolTol));
}

std::vector<ComplexVector> environment_vectors(const GammaTable &g) {
    int d = g.d();
    std::vector<ComplexVector> vs;
    vs.reserve(static_cast<size_t>(d) * d);
    for (int l = 0; l < d; l++) {
        for (int k = 0; k < d; k++) {
            ComplexVector v(static_cast<size_t>(d) * d);
            for (int z = 0; z < d; z++) {
                int a = mod_d(z + l, d);
                v[flat_index(d, a, z)] = omega_pow(d, static_cast<long long>(z) * k) * g.at(a, z) / static_cast<double>(d);
            }
            vs.push_back(std::move(v));
        }
    }
    return vs;
}

ComplexVector resummed_joint(const StateVector &psi, const GammaTable &g) {
    int d = g.d();
    if (psi.dim() != static_cast<size_t>(d)) {
        throw std::invalid_argument("resummed_joint: state dimension does not match gamma table");
    }
    auto vs = environment_vectors(g);
    ComplexVector out(static_cast<size_t>(d) * d * d);
    for (int l = 0; l < d; l++) {
        for (int k = 0; k < d; k++) {
            ComplexVector term = apply(pauli_op(PauliIndex{d, l, k}), psi.vector());
            out = out + tensor(term, vs[flat_index(d, l, k)]);
        }
    }
    return out;
}

ErrorWeights induced_weights(const GammaTable &g) {
    require_valid(g);
    auto vs = environment_vectors(g);
    std::vector<double> p;
    p.reserve(vs.size());
    for (const auto &v : vs) {
        p.push_back(v.norm_squared());
    }
    return ErrorWeights(g.d(), std::move(p));
}

double max_syndrome_overlap(const GammaTable &g) {
    auto vs = environment_vectors(g);
    double worst = 0;
    for (size_t x = 0; x < vs.size(); x++) {
        for (size_t y = x + 1; y < vs.size(); y++) {
            worst = std::max(worst, std::abs(inner(vs[x], vs[y])));
        }
    }
    return worst;
}

bool has_constant_diagonal_magnitudes(const GammaTable &g, double tol) {
    int d = g.d();
    for (int l = 0; l < d; l++) {
        double first = std::abs(g.at(mod_d(l, d), 0));
        for (int z = 1; z < d; z++) {
            if (std::abs(std::abs(g.at(mod_d(z + l, d), z)) - first) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::vector<double> environment_probabilities(const JointState &js) {
    int d = js.d();
    std::vector<double> probs(static_cast<size_t>(d) * d);
    for (int s = 0; s < d; s++) {
        for (int a = 0; a < d; a++) {
            for (int b = 0; b < d; b++) {
                probs[flat_index(d, a, b)] += std::norm(js.amplitude(s, a, b));
            }
        }
    }
    return probs;
}

EnvironmentOutcome measure_environment_raw(const JointState &js, Rng &rng) {
    int d = js.d();
    auto probs = environment_probabilities(js);
    size_t pick = sample_index(probs, rng);
    int a = static_cast<int>(pick) / d;
    int b = static_cast<int>(pick) % d;
    ComplexVector system(static_cast<size_t>(d));
    for (int s = 0; s < d; s++) {
        system[s] = js.amplitude(s, a, b);
    }
    return EnvironmentOutcome{a, b, probs[pick], StateVector::normalize(std::move(system))};
}

PauliIndex sample_error(const ErrorWeights &w, Rng &rng) {
    size_t pick = sample_index(w.flat(), rng);
    int d = w.d();
    return PauliIndex{d, static_cast<int>(pick) / d, static_cast<int>(pick) % d};
}

CorrectionTrace apply_and_correct(const StateVector &psi, const PauliIndex &idx) {
    if (psi.dim() != static_cast<size_t>(idx.d)) {
        throw std::invalid_argument("apply_and_correct: state dimension does not match Pauli index");
    }
    StateVector corrupted = apply(pauli_op(idx), psi);
    StateVector corrected = apply(correction_op(idx.d, pauli_inverse(idx)), corrupted);
    return CorrectionTrace{std::move(corrupted), std::move(corrected)};
}

}  // namespace qpauli
