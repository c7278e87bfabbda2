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
 * Order finding and factoring on two registers.
 *
 * Pipeline: prepare the first register in the uniform superposition, map
 * |n>|0> -> |n>|a^n mod Nc>, measure the second register (collapsing the
 * first onto an arithmetic progression with the period r as stride), apply
 * the Fourier matrix to the first register, sample a peak y, and recover r
 * from the continued-fraction expansion of y / 2^k. Factors come from
 * gcd(a^{r/2} +- 1, Nc) when r is even and a^{r/2} != -1 (mod Nc).
 *
 * Everything exists in two forms:
 *  - dense operators (shor_u, shor_network) for small registers, used to
 *    cross-check the factor-network composition rules;
 *  - the structured state-vector pipeline (run_shor, analyze_shor_branches)
 *    which never builds a full operator and scales to k = 9.
 */

#pragma once

#include "qcpu/complex_matrix.hpp"
#include "qcpu/qcpu.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcpu {

// Classical helpers.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

struct ShorConfig {
    int composite = 0; ///< Nc, the number to factor
    int base = 0;      ///< a, coprime to Nc for the quantum run
    int k = 0;         ///< first-register qubits
    int k2 = 0;        ///< second-register qubits, 2^k2 >= Nc

    /// k defaults to the smallest value with 2^k >= Nc^2, k2 to
    /// ceil(log2(Nc)).
    static ShorConfig make(int composite, int base, int k = 0);

    Index first_dim() const { return Index{1} << k; }
    Index second_dim() const { return Index{1} << k2; }
    Index total_dim() const { return first_dim() * second_dim(); }

    /// Throws ConfigError on invalid parameters. gcd(a, Nc) > 1 is legal
    /// here; run_shor rejects it (the factor is then immediate).
    void validate() const;
};

/// The mapping |n>|0> -> |n>|a^n mod Nc| as a dense matrix; columns with
/// a nonzero second register are annihilated (the operator is an isometry
/// on the |.>|0> slice only).
ComplexMatrix shor_g(const ShorConfig &cfg);

/// Second-register projector I_1 (x) |u><u|.
ComplexMatrix shor_m(const ShorConfig &cfg, int residue);

/// Uniform-superposition preparation H^(x)k (x) I_2.
ComplexMatrix shor_prep(const ShorConfig &cfg);

/// First-register Fourier matrix lifted to both registers: F (x) I_2.
ComplexMatrix shor_fourier(const ShorConfig &cfg);

/// Dense total transformation (F (x) I_2) M(u) G H_prep. Trace-decreasing:
/// the squared norm of its action on |0>|0> is the residue probability.
ComplexMatrix shor_u(const ShorConfig &cfg, int residue);

/// The whole network: scalable connector chain over
/// [F (x) I_2, M(u), G, H_prep]; its register block equals shor_u.
ScalableNetwork shor_network(const ShorConfig &cfg, int residue);

/// Connector chain over the k single-qubit Hadamards H_j (x) I_2; its
/// register block is the full preparation H^(x)k (x) I_2.
ComposedNetwork shor_hadamard_network(const ShorConfig &cfg);

// ---- structured pipeline ---------------------------------------------------

/// |uniform> (x) |0> on the combined register space.
StateVector shor_initial_state(const ShorConfig &cfg);

/// Structured application of the residue mapping.
StateVector shor_apply_g(const ShorConfig &cfg, const StateVector &state);

/// Probability of each second-register value.
std::vector<double> shor_second_distribution(const StateVector &state,
                                             Index second_dim);

/// Projects onto second-register value u and renormalizes. probability 0
/// (with absent state) marks an impossible outcome.
PostselectResult shor_measure_second(const StateVector &state,
                                     Index second_dim, int residue);

/// Fourier matrix applied to the first register only (structured).
StateVector shor_apply_fourier_first(const ShorConfig &cfg,
                                     const StateVector &state);

/// Marginal distribution of the first register.
std::vector<double> shor_first_distribution(const StateVector &state,
                                            Index second_dim);

// ---- classical post-processing ----------------------------------------------

struct PeriodResult {
    bool found = false;
    std::uint64_t period = 0;         ///< validated period
    std::uint64_t convergent_den = 0; ///< raw continued-fraction denominator
    std::string failure;              ///< reason when !found
};

/// Recovers the period from a sampled peak y: continued-fraction expansion
/// of y/Q, smallest convergent denominator r' <= Nc within 1/(2Q), then
/// validation of a^{r'} = 1 escalating through small multiples of r'.
PeriodResult continued_fraction_period(std::uint64_t y, std::uint64_t Q,
                                       int composite, int base);

/// Factor pair from a validated period, or a failure reason
/// ("odd period", "a^{r/2} = -1 (mod Nc)", "trivial gcd").
struct FactorResult {
    std::optional<std::pair<int, int>> factors;
    std::string failure;
};

FactorResult shor_factors_from_period(const ShorConfig &cfg,
                                      std::uint64_t period);

// ---- end-to-end -------------------------------------------------------------

struct ShorRun {
    ShorConfig config;
    int measured_residue = 0;
    double residue_probability = 0.0;
    StateVector post_measure_state; ///< first-register state after collapse
    std::vector<double> dft_distribution;
    std::uint64_t sampled_y = 0;
    double y_probability = 0.0;
    cplx sampled_amplitude{0.0, 0.0}; ///< first-register amplitude at y
    PeriodResult period;
    std::optional<std::pair<int, int>> factors;
    std::string failure_reason; ///< empty on success
};

/// One seeded run of the full pipeline. Requires gcd(a, Nc) = 1.
ShorRun run_shor(const ShorConfig &cfg, std::uint64_t seed);

// ---- exhaustive branch analysis ---------------------------------------------

struct ShorOutcome {
    std::uint64_t y = 0;
    double probability = 0.0; ///< conditional on the residue branch
    PeriodResult period;
    std::optional<std::pair<int, int>> factors;
    bool success = false;
};

struct ShorResidueBranch {
    int residue = 0;
    double probability = 0.0;
    std::vector<double> dft_distribution;
    std::vector<ShorOutcome> outcomes;
};

struct ShorAnalysis {
    std::vector<ShorResidueBranch> branches;
    double success_probability = 0.0; ///< total mass of successful outcomes
};

/// Enumerates every measurement branch with probability above the floor.
ShorAnalysis analyze_shor_branches(const ShorConfig &cfg,
                                   double probability_floor = 1e-15);

} // namespace qcpu
