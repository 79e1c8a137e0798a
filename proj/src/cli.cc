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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpauli/error_channel.h"
#include "qpauli/json_io.h"
#include "qpauli/teleport.h"
#include "qpauli/weyl.h"

namespace qpauli {

using nlohmann::json;

namespace {

/// Thrown for bad flags or unreadable input; maps to kExitInputError.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig &cfg, std::istream &in) {
    if (!cfg.input_path) {
        throw InputError("--input is required for " + cfg.command);
    }
    std::stringstream buf;
    if (*cfg.input_path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(*cfg.input_path);
        if (!f) {
            throw InputError("cannot open input file " + *cfg.input_path);
        }
        buf << f.rdbuf();
    }
    return buf.str();
}

json read_json_input(const RunConfig &cfg, std::istream &in) {
    try {
        return parse_json(read_input(cfg, in));
    } catch (const JsonFormatError &e) {
        throw InputError(e.what());
    }
}

void require_dimension_flag(int d) {
    if (d < 2) {
        throw InputError("--d must be at least 2, got " + std::to_string(d));
    }
}

void check_d_flag(const RunConfig &cfg, int actual) {
    if (cfg.d && *cfg.d != actual) {
        throw InputError("--d " + std::to_string(*cfg.d) + " does not match input dimension " + std::to_string(actual));
    }
    require_dimension_flag(actual);
}

void require_label(const std::optional<int> &v, int d, const char *flag) {
    if (!v) {
        throw InputError(std::string(flag) + " is required");
    }
    if (*v < 0 || *v >= d) {
        throw InputError(std::string(flag) + " = " + std::to_string(*v) + " out of range [0, " + std::to_string(d) + ")");
    }
}

void emit(std::ostream &out, const json &report) {
    out << report.dump(2) << "\n";
}

template <typename F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const JsonFormatError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int cmd_decompose(const RunConfig &cfg, CliStreams io) {
    return guarded(io.err, [&] {
        ComplexMatrix a = matrix_from_json(read_json_input(cfg, io.in));
        if (!a.is_square()) {
            throw InputError("decompose needs a square matrix");
        }
        int d = static_cast<int>(a.rows());
        check_d_flag(cfg, d);

        PauliCoefficients c = decompose(a, d);
        double residual = max_abs_diff(reconstruct(c), a);
        json report = to_json(c);
        report["residual"] = residual;
        emit(io.out, report);
        if (!(residual < 1e-8)) {
            io.err << "error: reconstruction residual " << residual << " exceeds 1e-8\n";
            return static_cast<int>(kExitCheckFailed);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_channel(const RunConfig &cfg, CliStreams io) {
    return guarded(io.err, [&] {
        GammaTable g = gamma_from_json(read_json_input(cfg, io.in));
        int d = g.d();
        check_d_flag(cfg, d);
        if (auto violation = validate_gamma(g)) {
            emit(io.out,
                 json{{"valid", false},
                      {"column", violation->column},
                      {"column_norm_squared", violation->column_norm_squared}});
            io.err << "error: " << violation->describe() << "\n";
            return static_cast<int>(kExitValidationFailure);
        }

        ErrorWeights w = induced_weights(g);
        if (cfg.mode == ChannelMode::kWeights) {
            json report = to_json(w);
            report["sum"] = w.sum();
            emit(io.out, report);
            return static_cast<int>(kExitOk);
        }

        json trials = json::array();
        bool all_ok = true;
        for (int t = 0; t < cfg.trials; t++) {
            Rng rng(cfg.seed + static_cast<uint64_t>(t));
            PauliIndex idx = sample_error(w, rng);
            StateVector psi = random_state(d, rng);
            double f = fidelity(apply_and_correct(psi, idx).corrected, psi);
            all_ok = all_ok && std::abs(f - 1.0) <= kProtocolTol;
            trials.push_back(json{{"trial", t}, {"l", idx.l}, {"k", idx.k}, {"fidelity", f}});
        }
        emit(io.out, json{{"d", d}, {"trials", std::move(trials)}, {"all_corrected", all_ok}});
        return static_cast<int>(all_ok ? kExitOk : kExitCheckFailed);
    });
}

int cmd_teleport(const RunConfig &cfg, CliStreams io) {
    return guarded(io.err, [&] {
        if (!cfg.d) {
            throw InputError("--d is required for teleport");
        }
        int d = *cfg.d;
        require_dimension_flag(d);
        require_label(cfg.A, d, "--A");
        require_label(cfg.B, d, "--B");
        if (cfg.forced_M1.has_value() != cfg.forced_M2.has_value()) {
            throw InputError("--M1 and --M2 must be given together");
        }
        if (cfg.forced_M1) {
            require_label(cfg.forced_M1, d, "--M1");
            require_label(cfg.forced_M2, d, "--M2");
        }

        std::optional<StateVector> fixed_input;
        if (cfg.input_path) {
            ComplexVector v = vector_from_json(read_json_input(cfg, io.in));
            if (v.dim() != static_cast<size_t>(d)) {
                throw InputError("input state has dimension " + std::to_string(v.dim()) + ", expected " + std::to_string(d));
            }
            if (!(std::abs(v.norm_squared() - 1.0) <= kProtocolTol)) {
                throw InputError("input state is not normalized");
            }
            fixed_input = StateVector::normalize(std::move(v));
        }

        BellLabel lbl = BellLabel::make(d, *cfg.A, *cfg.B);
        json transcripts = json::array();
        bool all_ok = true;
        for (int t = 0; t < cfg.trials; t++) {
            Rng rng(cfg.seed + static_cast<uint64_t>(t));
            StateVector psi = fixed_input ? *fixed_input : random_state(d, rng);
            TeleportTranscript tr = cfg.forced_M1 ? teleport(psi, lbl, *cfg.forced_M1, *cfg.forced_M2)
                                                  : teleport(psi, lbl, rng);
            all_ok = all_ok && std::abs(tr.fidelity_to_input - 1.0) <= kProtocolTol;
            transcripts.push_back(to_json(tr));
        }
        emit(io.out, json{{"d", d}, {"transcripts", std::move(transcripts)}, {"all_ok", all_ok}});
        return static_cast<int>(all_ok ? kExitOk : kExitCheckFailed);
    });
}

int run_cli(const std::vector<std::string> &args, CliStreams io) {
    CLI::App app{"Generalized Pauli operators, qudit error model, and qudit teleportation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<int> d, A, B, M1, M2;
    std::optional<std::string> input;
    std::string mode = "weights";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--d", d, "qudit dimension");
        sub->add_option("--input", input, "input JSON file, or - for stdin");
    };

    auto *dec = app.add_subcommand("decompose", "Expand a d x d matrix in the X_i Z_j basis");
    add_common(dec);

    auto *chan = app.add_subcommand("channel", "Induced Pauli weights of a gamma coupling table");
    add_common(chan);
    chan->add_option("--mode", mode, "weights | sample")->check(CLI::IsMember({"weights", "sample"}));
    chan->add_option("--seed", cfg.seed, "base seed; trial t uses seed + t");
    chan->add_option("--trials", cfg.trials, "number of sampled errors")->check(CLI::PositiveNumber);

    auto *tel = app.add_subcommand("teleport", "Teleport a qudit through a generalized Bell pair");
    add_common(tel);
    tel->add_option("--seed", cfg.seed, "base seed; trial t uses seed + t");
    tel->add_option("--trials", cfg.trials, "number of runs")->check(CLI::PositiveNumber);
    tel->add_option("--A", A, "first Bell label");
    tel->add_option("--B", B, "second Bell label");
    tel->add_option("--M1", M1, "force the first measurement outcome");
    tel->add_option("--M2", M2, "force the second measurement outcome");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::ParseError &e) {
        io.err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    cfg.d = d;
    cfg.input_path = input;
    cfg.A = A;
    cfg.B = B;
    cfg.forced_M1 = M1;
    cfg.forced_M2 = M2;
    cfg.mode = mode == "sample" ? ChannelMode::kSample : ChannelMode::kWeights;

    if (dec->parsed()) {
        cfg.command = "decompose";
        return cmd_decompose(cfg, io);
    }
    if (chan->parsed()) {
        cfg.command = "channel";
        return cmd_channel(cfg, io);
    }
    cfg.command = "teleport";
    return cmd_teleport(cfg, io);
}

}  // namespace qpauli
