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

// JSON encodings. Complex numbers are [re, im] pairs.
//
//   matrix        {"rows": R, "cols": C, "entries": [[re, im], ...]}   row-major
//   vector        {"dim": D, "amps": [[re, im], ...]}
//   coefficients  {"d": D, "coeffs": [{"i": i, "j": j, "re": .., "im": ..}, ...]}   i-major
//   gamma         {"d": D, "gamma": [[[re, im], ...], ...]}   gamma[a][b]
//   weights       {"d": D, "weights": [[p, ...], ...]}        weights[l][k]
//   transcript    {"d", "A", "B", "M1", "M2", "fidelity", "final": vector}

#ifndef QPAULI_JSON_IO_H
#define QPAULI_JSON_IO_H

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qpauli/error_channel.h"
#include "qpauli/linalg.h"
#include "qpauli/teleport.h"
#include "qpauli/weyl.h"

namespace qpauli {

/// Malformed or ill-typed JSON input.
class JsonFormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

nlohmann::json to_json(const ComplexMatrix &m);
nlohmann::json to_json(const ComplexVector &v);
nlohmann::json to_json(const StateVector &v);
nlohmann::json to_json(const PauliCoefficients &c);
nlohmann::json to_json(const GammaTable &g);
nlohmann::json to_json(const ErrorWeights &w);
nlohmann::json to_json(const TeleportTranscript &t);

ComplexMatrix matrix_from_json(const nlohmann::json &j);
ComplexVector vector_from_json(const nlohmann::json &j);
PauliCoefficients coefficients_from_json(const nlohmann::json &j);
GammaTable gamma_from_json(const nlohmann::json &j);
ErrorWeights weights_from_json(const nlohmann::json &j);

/// Parses text, rethrowing parse failures as JsonFormatError.
nlohmann::json parse_json(const std::string &text);

}  // namespace qpauli

#endif
