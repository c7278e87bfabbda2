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

#include "qcpu/shor.hpp"

#include "qcpu/gates.hpp"
#include "qcpu/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcpu {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
    if (modulus == 0)
        throw ConfigError("mod_pow: zero modulus");
    std::uint64_t result = 1 % modulus;
    std::uint64_t factor = base % modulus;
    while (exponent > 0) {
        if (exponent & 1)
            result = (result * factor) % modulus;
        factor = (factor * factor) % modulus;
        exponent >>= 1;
    }
    return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// ---- configuration ----------------------------------------------------------

ShorConfig ShorConfig::make(int composite, int base, int k) {
    ShorConfig cfg;
    cfg.composite = composite;
    cfg.base = base;
    int k2 = 1;
    while ((1 << k2) < composite)
        ++k2;
    cfg.k2 = k2;
    if (k > 0) {
        cfg.k = k;
    } else {
        const long long target =
            static_cast<long long>(composite) * composite;
        int kk = 1;
        while ((1LL << kk) < target)
            ++kk;
        cfg.k = kk;
    }
    cfg.validate();
    return cfg;
}

void ShorConfig::validate() const {
    if (composite < 4)
        throw ConfigError("composite must be >= 4, got " +
                          std::to_string(composite));
    if (base <= 1 || base >= composite)
        throw ConfigError("base must satisfy 1 < a < Nc, got " +
                          std::to_string(base));
    if (k < 1 || k2 < 1)
        throw ConfigError("register sizes must be positive");
    if ((Index{1} << k2) < composite)
        throw ConfigError("second register too small: 2^k2 < Nc");
    if (total_dim() > kMaxStateDim)
        throw ConfigError("combined register dimension " +
                          std::to_string(total_dim()) +
                          " exceeds the state cap " +
                          std::to_string(kMaxStateDim));
}

namespace {

void require_dense(const ShorConfig &cfg, const char *what) {
    if (cfg.total_dim() > kMaxDenseDim)
        throw CapError(std::string(what) + ": combined dimension " +
                       std::to_string(cfg.total_dim()) +
                       " exceeds the dense cap; use the structured pipeline");
}

} // namespace

// ---- dense operators ---------------------------------------------------------

ComplexMatrix shor_g(const ShorConfig &cfg) {
    require_dense(cfg, "shor_g");
    const Index second = cfg.second_dim();
    ComplexMatrix g(cfg.total_dim(), cfg.total_dim());
    for (Index n = 0; n < cfg.first_dim(); ++n) {
        const auto residue = static_cast<Index>(mod_pow(
            static_cast<std::uint64_t>(cfg.base), static_cast<std::uint64_t>(n),
            static_cast<std::uint64_t>(cfg.composite)));
        g(n * second + residue, n * second + 0) = 1.0;
    }
    return g;
}

ComplexMatrix shor_m(const ShorConfig &cfg, int residue) {
    require_dense(cfg, "shor_m");
    if (residue < 0 || residue >= cfg.second_dim())
        throw IndexError("residue outside the second register range");
    return tensor(ComplexMatrix::identity(cfg.first_dim()),
                  outer(residue, residue, cfg.second_dim()));
}

ComplexMatrix shor_prep(const ShorConfig &cfg) {
    require_dense(cfg, "shor_prep");
    return tensor(hadamard_layer(cfg.k), ComplexMatrix::identity(cfg.second_dim()));
}

ComplexMatrix shor_fourier(const ShorConfig &cfg) {
    require_dense(cfg, "shor_fourier");
    return tensor(fourier_matrix(RegisterShape::of_qubits(cfg.k)),
                  ComplexMatrix::identity(cfg.second_dim()));
}

ComplexMatrix shor_u(const ShorConfig &cfg, int residue) {
    require_dense(cfg, "shor_u");
    return matmul(shor_fourier(cfg),
                  matmul(shor_m(cfg, residue),
                         matmul(shor_g(cfg), shor_prep(cfg))));
}

ScalableNetwork shor_network(const ShorConfig &cfg, int residue) {
    require_dense(cfg, "shor_network");
    const std::vector<ComplexMatrix> operands{
        shor_fourier(cfg), shor_m(cfg, residue), shor_g(cfg), shor_prep(cfg)};
    const std::vector<std::string> labels{
        "F(x)I2", "M(" + std::to_string(residue) + ")", "G", "H"};
    return scalable_product(operands, labels);
}

ComposedNetwork shor_hadamard_network(const ShorConfig &cfg) {
    require_dense(cfg, "shor_hadamard_network");
    std::vector<ComplexMatrix> operands;
    std::vector<std::string> labels;
    const ComplexMatrix h = hadamard();
    const ComplexMatrix second_id = ComplexMatrix::identity(cfg.second_dim());
    for (int j = 1; j <= cfg.k; ++j) {
        operands.push_back(tensor(single_qubit_on(h, j, cfg.k), second_id));
        labels.push_back("H" + std::to_string(j) + "(x)I2");
    }
    return product_compose(operands, labels);
}

// ---- structured pipeline ------------------------------------------------------

StateVector shor_initial_state(const ShorConfig &cfg) {
    StateVector state(cfg.total_dim());
    const double amp =
        1.0 / std::sqrt(static_cast<double>(cfg.first_dim()));
    for (Index n = 0; n < cfg.first_dim(); ++n)
        state[n * cfg.second_dim()] = amp;
    return state;
}

StateVector shor_apply_g(const ShorConfig &cfg, const StateVector &state) {
    if (state.dim() != cfg.total_dim())
        throw DimensionError("shor_apply_g: state dimension mismatch");
    const Index second = cfg.second_dim();
    StateVector out(state.dim());
    for (Index n = 0; n < cfg.first_dim(); ++n) {
        const auto residue = static_cast<Index>(mod_pow(
            static_cast<std::uint64_t>(cfg.base), static_cast<std::uint64_t>(n),
            static_cast<std::uint64_t>(cfg.composite)));
        out[n * second + residue] = state[n * second];
    }
    return out;
}

std::vector<double> shor_second_distribution(const StateVector &state,
                                             Index second_dim) {
    if (second_dim <= 0 || state.dim() % second_dim != 0)
        throw DimensionError("second register dimension does not divide state");
    std::vector<double> probs(static_cast<std::size_t>(second_dim), 0.0);
    const Index first_dim = state.dim() / second_dim;
    for (Index n = 0; n < first_dim; ++n)
        for (Index s = 0; s < second_dim; ++s)
            probs[static_cast<std::size_t>(s)] += std::norm(state[n * second_dim + s]);
    return probs;
}

PostselectResult shor_measure_second(const StateVector &state,
                                     Index second_dim, int residue) {
    if (second_dim <= 0 || state.dim() % second_dim != 0)
        throw DimensionError("second register dimension does not divide state");
    if (residue < 0 || residue >= second_dim)
        throw IndexError("residue outside the second register range");
    const Index first_dim = state.dim() / second_dim;
    StateVector projected(first_dim);
    for (Index n = 0; n < first_dim; ++n)
        projected[n] = state[n * second_dim + residue];
    const double weight = projected.norm_squared();
    PostselectResult result;
    result.probability = weight;
    if (weight > 0.0)
        result.state = scale(1.0 / std::sqrt(weight), projected);
    return result;
}

StateVector shor_apply_fourier_first(const ShorConfig &cfg,
                                     const StateVector &state) {
    if (state.dim() != cfg.total_dim())
        throw DimensionError("shor_apply_fourier_first: dimension mismatch");
    const ComplexMatrix f = fourier_matrix(RegisterShape::of_qubits(cfg.k));
    const Index second = cfg.second_dim();
    StateVector out(state.dim());
    StateVector column(cfg.first_dim());
    for (Index s = 0; s < second; ++s) {
        bool any = false;
        for (Index n = 0; n < cfg.first_dim(); ++n) {
            column[n] = state[n * second + s];
            any = any || column[n] != cplx{0.0, 0.0};
        }
        if (!any)
            continue;
        const StateVector transformed = apply(f, column);
        for (Index y = 0; y < cfg.first_dim(); ++y)
            out[y * second + s] = transformed[y];
    }
    return out;
}

std::vector<double> shor_first_distribution(const StateVector &state,
                                            Index second_dim) {
    if (second_dim <= 0 || state.dim() % second_dim != 0)
        throw DimensionError("second register dimension does not divide state");
    const Index first_dim = state.dim() / second_dim;
    std::vector<double> probs(static_cast<std::size_t>(first_dim), 0.0);
    for (Index n = 0; n < first_dim; ++n)
        for (Index s = 0; s < second_dim; ++s)
            probs[static_cast<std::size_t>(n)] += std::norm(state[n * second_dim + s]);
    return probs;
}

// ---- classical post-processing -------------------------------------------------

PeriodResult continued_fraction_period(std::uint64_t y, std::uint64_t Q,
                                       int composite, int base) {
    PeriodResult result;
    if (Q == 0 || y >= Q) {
        result.failure = "invalid peak: y must satisfy 0 <= y < Q";
        return result;
    }
    if (y == 0) {
        result.failure = "y = 0 carries no period information";
        return result;
    }

    // Convergents of y/Q by the integer Euclidean recurrence. Denominators
    // increase, so the first convergent within 1/(2Q) has the smallest one.
    const auto nc = static_cast<std::uint64_t>(composite);
    const double target = static_cast<double>(y) / static_cast<double>(Q);
    const double bound = 1.0 / (2.0 * static_cast<double>(Q));
    std::uint64_t num = y, den = Q;
    std::uint64_t h_prev = 0, h_curr = 1; // numerators  (h_{-2}, h_{-1})
    std::uint64_t k_prev = 1, k_curr = 0; // denominators (k_{-2}, k_{-1})
    std::uint64_t candidate = 0;
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t rem = num % den;
        const std::uint64_t h_next = a * h_curr + h_prev;
        const std::uint64_t k_next = a * k_curr + k_prev;
        h_prev = h_curr;
        h_curr = h_next;
        k_prev = k_curr;
        k_curr = k_next;
        num = den;
        den = rem;
        if (k_curr == 0)
            continue;
        if (k_curr > nc)
            break;
        const double approx =
            static_cast<double>(h_curr) / static_cast<double>(k_curr);
        if (k_curr >= 1 && std::abs(target - approx) <= bound) {
            candidate = k_curr;
            break;
        }
    }
    if (candidate == 0) {
        result.failure = "no convergent denominator <= Nc within 1/(2Q)";
        return result;
    }
    result.convergent_den = candidate;

    // The convergent denominator may be a proper divisor of the period
    // (common factor between the peak offset and the period); escalate
    // through small multiples until a^{r} = 1 (mod Nc) holds.
    for (std::uint64_t r = candidate; r <= nc; r += candidate) {
        if (mod_pow(static_cast<std::uint64_t>(base), r, nc) == 1) {
            result.found = true;
            result.period = r;
            return result;
        }
    }
    result.failure = "no multiple of convergent denominator " +
                     std::to_string(candidate) + " is a period <= Nc";
    return result;
}

FactorResult shor_factors_from_period(const ShorConfig &cfg,
                                      std::uint64_t period) {
    FactorResult result;
    if (period == 0 || period % 2 != 0) {
        result.failure = "odd period";
        return result;
    }
    const auto nc = static_cast<std::uint64_t>(cfg.composite);
    const std::uint64_t half = mod_pow(static_cast<std::uint64_t>(cfg.base),
                                       period / 2, nc);
    if (half == nc - 1) {
        result.failure = "a^{r/2} = -1 (mod Nc)";
        return result;
    }
    const std::uint64_t g_minus = gcd_u64(half >= 1 ? half - 1 : nc, nc);
    const std::uint64_t g_plus = gcd_u64(half + 1, nc);
    std::uint64_t g = 0;
    if (g_minus > 1 && g_minus < nc)
        g = g_minus;
    else if (g_plus > 1 && g_plus < nc)
        g = g_plus;
    if (g == 0) {
        result.failure = "trivial gcd";
        return result;
    }
    const int low = static_cast<int>(std::min(g, nc / g));
    const int high = static_cast<int>(std::max(g, nc / g));
    result.factors = {low, high};
    return result;
}

// ---- end-to-end -----------------------------------------------------------------

ShorRun run_shor(const ShorConfig &cfg, std::uint64_t seed) {
    cfg.validate();
    if (gcd_u64(static_cast<std::uint64_t>(cfg.base),
                static_cast<std::uint64_t>(cfg.composite)) != 1)
        throw ConfigError("gcd(a, Nc) > 1: the factor is immediate, nothing "
                          "to simulate");

    Rng rng = Rng::stream(seed, "shor");
    ShorRun run;
    run.config = cfg;

    StateVector state = shor_apply_g(cfg, shor_initial_state(cfg));

    const std::vector<double> residue_probs =
        shor_second_distribution(state, cfg.second_dim());
    const auto residue = static_cast<int>(rng.sample_index(residue_probs));
    run.measured_residue = residue;
    run.residue_probability = residue_probs[static_cast<std::size_t>(residue)];

    const PostselectResult collapsed =
        shor_measure_second(state, cfg.second_dim(), residue);
    if (!collapsed.state)
        throw Error("run_shor: sampled a zero-probability residue");
    run.post_measure_state = *collapsed.state;

    // Fourier transform of the collapsed first register.
    const ComplexMatrix f = fourier_matrix(RegisterShape::of_qubits(cfg.k));
    const StateVector transformed = apply(f, run.post_measure_state);
    run.dft_distribution.resize(static_cast<std::size_t>(cfg.first_dim()));
    for (Index yy = 0; yy < cfg.first_dim(); ++yy)
        run.dft_distribution[static_cast<std::size_t>(yy)] =
            std::norm(transformed[yy]);

    const std::size_t y = rng.sample_index(run.dft_distribution);
    run.sampled_y = y;
    run.y_probability = run.dft_distribution[y];
    run.sampled_amplitude = transformed[static_cast<Index>(y)];

    run.period = continued_fraction_period(
        run.sampled_y, static_cast<std::uint64_t>(cfg.first_dim()),
        cfg.composite, cfg.base);
    if (!run.period.found) {
        run.failure_reason = run.period.failure;
        return run;
    }
    const FactorResult factored = shor_factors_from_period(cfg, run.period.period);
    run.factors = factored.factors;
    run.failure_reason = factored.failure;
    return run;
}

ShorAnalysis analyze_shor_branches(const ShorConfig &cfg,
                                   double probability_floor) {
    cfg.validate();
    ShorAnalysis analysis;
    const StateVector state = shor_apply_g(cfg, shor_initial_state(cfg));
    const std::vector<double> residue_probs =
        shor_second_distribution(state, cfg.second_dim());

    for (Index u = 0; u < cfg.second_dim(); ++u) {
        const double p_u = residue_probs[static_cast<std::size_t>(u)];
        if (p_u <= probability_floor)
            continue;
        ShorResidueBranch branch;
        branch.residue = static_cast<int>(u);
        branch.probability = p_u;

        const PostselectResult collapsed =
            shor_measure_second(state, cfg.second_dim(), static_cast<int>(u));
        const ComplexMatrix f =
            fourier_matrix(RegisterShape::of_qubits(cfg.k));
        const StateVector transformed = apply(f, *collapsed.state);
        branch.dft_distribution.resize(static_cast<std::size_t>(cfg.first_dim()));
        for (Index yy = 0; yy < cfg.first_dim(); ++yy)
            branch.dft_distribution[static_cast<std::size_t>(yy)] =
                std::norm(transformed[yy]);

        for (Index yy = 0; yy < cfg.first_dim(); ++yy) {
            const double p_y = branch.dft_distribution[static_cast<std::size_t>(yy)];
            if (p_y <= probability_floor)
                continue;
            ShorOutcome outcome;
            outcome.y = static_cast<std::uint64_t>(yy);
            outcome.probability = p_y;
            outcome.period = continued_fraction_period(
                outcome.y, static_cast<std::uint64_t>(cfg.first_dim()),
                cfg.composite, cfg.base);
            if (outcome.period.found) {
                const FactorResult factored =
                    shor_factors_from_period(cfg, outcome.period.period);
                outcome.factors = factored.factors;
                outcome.success = factored.factors.has_value();
            }
            if (outcome.success)
                analysis.success_probability += p_u * p_y;
            branch.outcomes.push_back(std::move(outcome));
        }
        analysis.branches.push_back(std::move(branch));
    }
    return analysis;
}

} // namespace qcpu
