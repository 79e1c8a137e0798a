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

#ifndef QPAULI_CLI_H
#define QPAULI_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qpauli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInputError = 2,
    kExitValidationFailure = 3,
};

enum class ChannelMode { kWeights, kSample };

struct RunConfig {
    std::string command;
    std::optional<int> d;
    std::optional<std::string> input_path;
    uint64_t seed = 0;
    int trials = 1;
    std::optional<int> A;
    std::optional<int> B;
    std::optional<int> forced_M1;
    std::optional<int> forced_M2;
    ChannelMode mode = ChannelMode::kWeights;
};

struct CliStreams {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;
};

int cmd_decompose(const RunConfig &cfg, CliStreams io);
int cmd_channel(const RunConfig &cfg, CliStreams io);
int cmd_teleport(const RunConfig &cfg, CliStreams io);

/// Parses args (args[0] is the program name) and dispatches. Returns the exit code.
int run_cli(const std::vector<std::string> &args, CliStreams io);

}  // namespace qpauli

#endif
