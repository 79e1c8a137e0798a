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

#ifndef QPAULI_RNG_H
#define QPAULI_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace qpauli {

/// Seedable random source with a fully specified output sequence.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// The standard library distributions are not (their algorithms vary between
/// implementations), so the conversions are done here:
///
///   uniform()  = (engine() >> 11) * 2^-53, a double in [0, 1).
///   normal()   = Box-Muller on two uniforms, returning the cosine branch only.
///
/// Same seed gives the same stream on every platform with IEEE doubles and a
/// conforming libm.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    double uniform();
    double normal();

   private:
    std::mt19937_64 engine_;
};

/// Draws an index with probability proportional to weights[i].
///
/// Weights must be non-negative with a positive sum. Zero-weight entries are
/// never returned, even when rounding pushes the draw past the final bucket.
size_t sample_index(std::span<const double> weights, Rng &rng);

}  // namespace qpauli

#endif
