// Copyright 2026 The qcpu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qcpu {

/// Base class for all qcpu errors.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Operand dimensions do not conform (matmul, add, apply, ...).
struct DimensionError : Error {
    explicit DimensionError(const std::string &msg) : Error(msg) {}
};

/// Basis index outside [0, dim).
struct IndexError : Error {
    explicit IndexError(const std::string &msg) : Error(msg) {}
};

/// A dense construction would exceed the configured dimension cap.
struct CapError : Error {
    explicit CapError(const std::string &msg) : Error(msg) {}
};

/// Invalid configuration or argument value.
struct ConfigError : Error {
    explicit ConfigError(const std::string &msg) : Error(msg) {}
};

/// Unknown export format name.
struct FormatError : Error {
    explicit FormatError(const std::string &msg) : Error(msg) {}
};

} // namespace qcpu
