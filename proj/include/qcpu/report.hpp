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

/**
 * @file
 * Run reports and canonical JSON serialization.
 *
 * Reports must be byte-identical across runs with the same seed, so the
 * writer is hand-rolled: object keys are emitted in sorted order, floats
 * with "%.15g", and nothing nondeterministic (wall time, pointers, locale)
 * reaches the output. Wall time goes to stderr unless explicitly requested.
 */

#pragma once

#include "qcpu/complex_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qcpu {

/// Minimal JSON value with deterministic serialization.
class JsonValue {
  public:
    using Array = std::vector<JsonValue>;
    using Object = std::map<std::string, JsonValue>; // sorted keys

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool b) : value_(b) {}
    JsonValue(std::int64_t i) : value_(i) {}
    JsonValue(int i) : value_(static_cast<std::int64_t>(i)) {}
    JsonValue(std::uint64_t u) : value_(static_cast<std::int64_t>(u)) {}
    JsonValue(double d) : value_(d) {}
    JsonValue(const char *s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Array a) : value_(std::move(a)) {}
    JsonValue(Object o) : value_(std::move(o)) {}

    /// Pretty-printed with two-space indent; deterministic bytes.
    std::string dump() const;

  private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string,
                 Array, Object>
        value_;

    void write(std::string &out, int indent) const;
};

struct RunReport {
    std::string algorithm;
    JsonValue::Object params;
    std::optional<std::uint64_t> seed;
    /// Selected amplitudes as (label, value); serialized as [re, im] pairs.
    std::vector<std::pair<std::string, cplx>> amplitudes;
    /// Basis index -> probability; omitted when absent.
    std::optional<std::vector<std::pair<Index, double>>> probabilities;
    std::optional<JsonValue> outcome;
    std::map<std::string, double> residuals;
    /// Algorithm-specific top-level keys (e.g. shor's "factors").
    JsonValue::Object extras;
    std::optional<double> wall_time_ms; ///< only serialized when set

    JsonValue to_json() const;
};

/// Writes value.dump() to path (plus trailing newline). Errors carry the
/// path in their message.
void write_json_file(const JsonValue &value, const std::string &path);

void write_report(const RunReport &report, const std::string &path);

} // namespace qcpu
