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

#include "qpauli/cli.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qpauli/json_io.h"

using namespace qpauli;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args, const std::string &stdin_text = "") {
    args.insert(args.begin(), "qpauli");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, {in, out, err});
    return {code, out.str(), err.str()};
}

std::string golden(const std::string &name) {
    return std::string(QPAULI_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

TEST(cli, decompose_identity) {
    auto r = run({"decompose", "--input", golden("identity3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse_json(r.out);
    PauliCoefficients c = coefficients_from_json(j);
    ASSERT_LT(std::abs(c.at(0, 0) - Complex(1)), 1e-15);
    for (size_t x = 1; x < c.coeffs().size(); x++) {
        ASSERT_LT(std::abs(c.coeffs()[x]), 1e-15);
    }
    ASSERT_LT(j["residual"].get<double>(), 1e-12);
}

TEST(cli, decompose_ket_bra) {
    auto r = run({"decompose", "--input", golden("ketbra01_d2.json"), "--d", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse_json(r.out);
    PauliCoefficients c = coefficients_from_json(j);
    ASSERT_EQ(c.at(1, 0), Complex(0.5));
    ASSERT_EQ(c.at(1, 1), Complex(-0.5));
    ASSERT_EQ(c.at(0, 0), Complex(0));
    ASSERT_LT(j["residual"].get<double>(), 1e-12);
}

TEST(cli, decompose_random_unitary_from_stdin) {
    Rng rng(80);
    std::string text = to_json(random_unitary(4, rng)).dump();
    auto r = run({"decompose", "--input", "-"}, text);
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_LT(parse_json(r.out)["residual"].get<double>(), 1e-10);
}

TEST(cli, decompose_input_errors) {
    ASSERT_EQ(run({"decompose", "--input", "-"}, "{oops").code, kExitInputError);
    ASSERT_EQ(run({"decompose", "--input", "-"}, R"({"rows": 2, "cols": 3, "entries": [[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})").code,
              kExitInputError);
    ASSERT_EQ(run({"decompose", "--input", golden("identity3.json"), "--d", "2"}).code, kExitInputError);
    ASSERT_EQ(run({"decompose"}).code, kExitInputError);
    ASSERT_EQ(run({"decompose", "--input", "/nonexistent/file.json"}).code, kExitInputError);
    ASSERT_EQ(run({"bogus"}).code, kExitInputError);
    ASSERT_EQ(run({}).code, kExitInputError);
}

TEST(cli, channel_weights_identity) {
    auto r = run({"channel", "--input", golden("identity_gamma3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    ErrorWeights w = weights_from_json(parse_json(r.out));
    for (int l = 0; l < 3; l++) {
        for (int k = 0; k < 3; k++) {
            ASSERT_NEAR(w.at(l, k), l == 0 ? 1.0 / 3 : 0.0, 1e-15);
        }
    }
    ASSERT_NEAR(parse_json(r.out)["sum"].get<double>(), 1.0, 1e-15);
}

TEST(cli, channel_sample_mode) {
    auto r = run({"channel", "--input", golden("identity_gamma2.json"), "--mode", "sample", "--trials", "100",
                  "--seed", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse_json(r.out);
    ASSERT_EQ(j["trials"].size(), 100u);
    for (const auto &t : j["trials"]) {
        ASSERT_EQ(t["l"], 0);
        ASSERT_NEAR(t["fidelity"].get<double>(), 1.0, 1e-10);
    }
    ASSERT_TRUE(j["all_corrected"].get<bool>());
}

TEST(cli, channel_invalid_gamma) {
    auto r = run({"channel", "--input", golden("zero_gamma2.json")});
    ASSERT_EQ(r.code, kExitValidationFailure);
    auto j = parse_json(r.out);
    ASSERT_EQ(j["column"], 0);
    ASSERT_FALSE(j["valid"].get<bool>());
    ASSERT_EQ(run({"channel", "--input", golden("identity_gamma2.json"), "--mode", "other"}).code, kExitInputError);
}

TEST(cli, teleport_random_trials) {
    auto r = run({"teleport", "--d", "2", "--A", "0", "--B", "0", "--trials", "10", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse_json(r.out);
    ASSERT_EQ(j["transcripts"].size(), 10u);
    for (const auto &t : j["transcripts"]) {
        ASSERT_NEAR(t["fidelity"].get<double>(), 1.0, 1e-10);
    }
}

TEST(cli, teleport_forced_outcomes) {
    auto r = run({"teleport", "--d", "3", "--A", "0", "--B", "2", "--M1", "1", "--M2", "1", "--input",
                  golden("ket2_d3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto t = parse_json(r.out)["transcripts"][0];
    ASSERT_EQ(t["M1"], 1);
    ASSERT_EQ(t["M2"], 1);
    ComplexVector final_state = vector_from_json(t["final"]);
    ASSERT_LT(max_abs_diff(final_state, basis_ket(3, 2).vector()), 1e-15);
}

TEST(cli, teleport_is_deterministic) {
    std::vector<std::string> args{"teleport", "--d", "3", "--A", "1", "--B", "2", "--trials", "4", "--seed", "9"};
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.out, b.out);
}

TEST(cli, teleport_input_errors) {
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "2", "--B", "0"}).code, kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "0"}).code, kExitInputError);
    ASSERT_EQ(run({"teleport", "--A", "0", "--B", "0"}).code, kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "1", "--A", "0", "--B", "0"}).code, kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "0", "--B", "0", "--M1", "1"}).code, kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "0", "--B", "0", "--M1", "1", "--M2", "2"}).code, kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "0", "--B", "0", "--input", golden("ket2_d3.json")}).code,
              kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "0", "--B", "0", "--input", "-"}, R"({"dim": 2, "amps": [[1,0],[1,0]]})")
                  .code,
              kExitInputError);
    ASSERT_EQ(run({"teleport", "--d", "2", "--A", "0", "--B", "0", "--trials", "0"}).code, kExitInputError);
}

TEST(cli, reports_match_golden_files) {
    struct Case {
        std::vector<std::string> args;
        std::string golden_name;
    };
    std::vector<Case> cases{
        {{"decompose", "--input", golden("identity3.json")}, "decompose_identity3.out.json"},
        {{"decompose", "--input", golden("ketbra01_d2.json")}, "decompose_ketbra01_d2.out.json"},
        {{"channel", "--input", golden("identity_gamma3.json")}, "channel_identity_gamma3.out.json"},
        {{"teleport", "--d", "3", "--A", "1", "--B", "2", "--M1", "1", "--M2", "1", "--input", golden("ket2_d3.json")},
         "teleport_forced_d3.out.json"},
    };
    for (const auto &c : cases) {
        auto r = run(c.args);
        ASSERT_EQ(r.code, 0) << c.golden_name << ": " << r.err;
        ASSERT_EQ(r.out, slurp(golden(c.golden_name))) << c.golden_name;
    }
}
