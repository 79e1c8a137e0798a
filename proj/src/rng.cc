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

#include "qpauli/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpauli {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    // 1 - uniform() lies in (0, 1], so the log is finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

size_t sample_index(std::span<const double> weights, Rng &rng) {
    double total = 0;
    size_t last_positive = weights.size();
    for (size_t i = 0; i < weights.size(); i++) {
        if (!(weights[i] >= 0) || !std::isfinite(weights[i])) {
            throw std::invalid_argument("sample_index: weights must be finite and non-negative");
        }
        if (weights[i] > 0) {
            total += weights[i];
            last_positive = i;
        }
    }
    if (last_positive == weights.size()) {
        throw std::invalid_argument("sample_index: weights sum to zero");
    }

    double target = rng.uniform() * total;
    double acc = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        if (weights[i] == 0) {
            continue;
        }
        acc += weights[i];
        if (target < acc) {
            return i;
        }
    }
    return last_positive;
}

}  // namespace qpauli
