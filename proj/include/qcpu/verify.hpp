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
 * Named verification suites over the algebra and the four algorithms.
 *
 * Each check compares two independent computation routes and records a
 * residual against a declared tolerance. Some checks are guards: they pass
 * when the residual EXCEEDS the threshold (e.g. the non-unitarity of the
 * network operator, or the defective phase-angle variant whose term sum
 * must not reproduce the Fourier matrix).
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcpu {

struct VerifyOptions {
    int trials = 20;
    std::uint64_t seed = 1;
    /// Multiplies every declared (nonzero) tolerance.
    double tolerance_scale = 1.0;
    /// Qubit range for the k-sweeping suites; 0 selects per-suite defaults.
    int k_min = 0;
    int k_max = 0;
    /// Self-test: deliberately flips one factor coefficient so the
    /// closed-form check must report a failure.
    bool fault_inject = false;
};

struct CheckResult {
    std::string id;
    double residual = 0.0;
    double tolerance = 0.0;
    bool inverted = false; ///< pass means residual > tolerance
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    int cases_run = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::vector<CheckResult> failures() const;
};

/// Known suites: qcpu-core, deutsch, qft, shor, grover, all.
std::vector<std::string> suite_names();

/// Throws ConfigError for unknown suite names.
SuiteResult run_suite(const std::string &name, const VerifyOptions &options);

} // namespace qcpu
