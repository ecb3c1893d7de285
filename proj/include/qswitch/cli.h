// Copyright 2026 The qswitch Authors
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

#ifndef QSWITCH_CLI_H
#define QSWITCH_CLI_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "qswitch/channel_model.h"

namespace qswitch {

inline constexpr const char *kVersion = "1.0.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInvalid = 2,
    kExitVerifyFailed = 3,
    kExitCapExceeded = 4,
};

/// Runs the command line with args (without the program name), writing
/// results to out and diagnostics to err. Returns the process exit code.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

/// %.12g; every number the CLI prints goes through this.
std::string format_number(double x);

/// Uniform point of the probability simplex on the lattice with spacing
/// 1e-9, so each entry prints exactly in 12 significant digits.
PauliChannel random_pauli(std::uint64_t seed);

}  // namespace qswitch

#endif
