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

#include "qpauli/json_io.h"

#include <cmath>

namespace qpauli {

using nlohmann::json;

namespace {

json complex_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw JsonFormatError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

double number(const json &j, const char *what) {
    if (!j.is_number()) {
        throw JsonFormatError(std::string(what) + " must be a number");
    }
    double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw JsonFormatError(std::string(what) + " must be finite");
    }
    return x;
}

long long integer(const json &j, const char *what) {
    if (!j.is_number_integer()) {
        throw JsonFormatError(std::string(what) + " must be an integer");
    }
    return j.get<long long>();
}

int positive_size(const json &j, const char *what) {
    long long n = integer(j, what);
    if (n < 1 || n > (1 << 15)) {
        throw JsonFormatError(std::string(what) + " out of range");
    }
    return static_cast<int>(n);
}

Complex complex_from(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw JsonFormatError("complex value must be a [re, im] pair");
    }
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

const json &array_of(const json &j, size_t n, const char *what) {
    if (!j.is_array() || j.size() != n) {
        throw JsonFormatError(std::string(what) + " must be an array of length " + std::to_string(n));
    }
    return j;
}

}  // namespace

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw JsonFormatError(std::string("invalid JSON: ") + e.what());
    }
}

json to_json(const ComplexMatrix &m) {
    json entries = json::array();
    for (Complex c : m.entries()) {
        entries.push_back(complex_json(c));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const ComplexVector &v) {
    json amps = json::array();
    for (Complex c : v.amps()) {
        amps.push_back(complex_json(c));
    }
    return json{{"dim", v.dim()}, {"amps", std::move(amps)}};
}

json to_json(const StateVector &v) {
    return to_json(v.vector());
}

json to_json(const PauliCoefficients &c) {
    json coeffs = json::array();
    for (int i = 0; i < c.d(); i++) {
        for (int j = 0; j < c.d(); j++) {
            Complex x = c.at(i, j);
            coeffs.push_back(json{{"i", i}, {"j", j}, {"re", x.real()}, {"im", x.imag()}});
        }
    }
    return json{{"d", c.d()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const GammaTable &g) {
    json rows = json::array();
    for (int a = 0; a < g.d(); a++) {
        json row = json::array();
        for (int b = 0; b < g.d(); b++) {
            row.push_back(complex_json(g.at(a, b)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"d", g.d()}, {"gamma", std::move(rows)}};
}

json to_json(const ErrorWeights &w) {
    json rows = json::array();
    for (int l = 0; l < w.d(); l++) {
        json row = json::array();
        for (int k = 0; k < w.d(); k++) {
            row.push_back(w.at(l, k));
        }
        rows.push_back(std::move(row));
    }
    return json{{"d", w.d()}, {"weights", std::move(rows)}};
}

json to_json(const TeleportTranscript &t) {
    return json{
        {"d", t.d},
        {"A", t.A},
        {"B", t.B},
        {"M1", t.M1},
        {"M2", t.M2},
        {"fidelity", t.fidelity_to_input},
        {"final", to_json(t.final_state)},
    };
}

ComplexMatrix matrix_from_json(const json &j) {
    int rows = positive_size(field(j, "rows"), "rows");
    int cols = positive_size(field(j, "cols"), "cols");
    const json &entries = array_of(field(j, "entries"), static_cast<size_t>(rows) * cols, "entries");
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (const auto &e : entries) {
        values.push_back(complex_from(e));
    }
    return ComplexMatrix(rows, cols, std::move(values));
}

ComplexVector vector_from_json(const json &j) {
    int dim = positive_size(field(j, "dim"), "dim");
    const json &amps = array_of(field(j, "amps"), dim, "amps");
    std::vector<Complex> values;
    values.reserve(amps.size());
    for (const auto &e : amps) {
        values.push_back(complex_from(e));
    }
    return ComplexVector(std::move(values));
}

PauliCoefficients coefficients_from_json(const json &j) {
    int d = positive_size(field(j, "d"), "d");
    const json &coeffs = array_of(field(j, "coeffs"), static_cast<size_t>(d) * d, "coeffs");
    PauliCoefficients out(d);
    for (const auto &c : coeffs) {
        long long i = integer(field(c, "i"), "i");
        long long jj = integer(field(c, "j"), "j");
        if (i < 0 || i >= d || jj < 0 || jj >= d) {
            throw JsonFormatError("coefficient index out of range");
        }
        out.at(static_cast<int>(i), static_cast<int>(jj)) = {number(field(c, "re"), "re"), number(field(c, "im"), "im")};
    }
    return out;
}

GammaTable gamma_from_json(const json &j) {
    int d = positive_size(field(j, "d"), "d");
    const json &rows = array_of(field(j, "gamma"), d, "gamma");
    GammaTable g(d);
    for (int a = 0; a < d; a++) {
        const json &row = array_of(rows[a], d, "gamma row");
        for (int b = 0; b < d; b++) {
            g.at(a, b) = complex_from(row[b]);
        }
    }
    return g;
}

ErrorWeights weights_from_json(const json &j) {
    int d = positive_size(field(j, "d"), "d");
    const json &rows = array_of(field(j, "weights"), d, "weights");
    std::vector<double> p;
    p.reserve(static_cast<size_t>(d) * d);
    for (int l = 0; l < d; l++) {
        const json &row = array_of(rows[l], d, "weights row");
        for (int k = 0; k < d; k++) {
            p.push_back(number(row[k], "weight"));
        }
    }
    try {
        return ErrorWeights(d, std::move(p));
    } catch (const std::invalid_argument &e) {
        throw JsonFormatError(e.what());
    }
}

}  // namespace qpauli
