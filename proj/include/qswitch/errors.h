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

#ifndef QSWITCH_ERRORS_H
#define QSWITCH_ERRORS_H

#include <stdexcept>
#include <string>

namespace qswitch {

/// Input outside the mathematical domain of an operation (bad probability,
/// non-Hermitian matrix, invalid channel, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operand shapes do not fit together.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Brute-force enumeration would exceed the configured term budget.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative eigensolver did not reach the requested off-diagonal norm.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qswitch

#endif
