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

#include "qcpu/qft.hpp"

#include "qcpu/gates.hpp"

#include <cmath>
#include <numbers>

namespace qcpu {
namespace {

/// B(n) H |0><n| for a given per-slot angle assignment.
QftTerm build_term(const QftConfig &cfg, Index n, std::vector<double> angles) {
    const int k = cfg.shape.qubits;
    ComplexMatrix phase_layer = phase_gate(angles[0]);
    for (int slot = 1; slot < k; ++slot)
        phase_layer = tensor(phase_layer, phase_gate(angles[slot]));
    const ComplexMatrix bh = matmul(phase_layer, hadamard_layer(k));
    // (B(n) H) |0><n| has the first column of B(n)H placed in column n.
    ComplexMatrix term(cfg.shape.dim, cfg.shape.dim);
    for (Index row = 0; row < cfg.shape.dim; ++row)
        term(row, n) = bh(row, 0);
    QftTerm out;
    out.n = n;
    out.angles = std::move(angles);
    out.matrix = std::move(term);
    return out;
}

} // namespace

QftConfig QftConfig::of_qubits(int k) {
    if (k < 1)
        throw ConfigError("qft requires at least one qubit");
    return QftConfig{RegisterShape::of_qubits(k)};
}

std::vector<QftTerm> qft_factorization(const QftConfig &cfg) {
    const int k = cfg.shape.qubits;
    const double n_dim = static_cast<double>(cfg.shape.dim);
    std::vector<QftTerm> terms;
    terms.reserve(static_cast<std::size_t>(cfg.shape.dim));
    for (Index n = 0; n < cfg.shape.dim; ++n) {
        std::vector<double> angles(static_cast<std::size_t>(k));
        for (int slot = 0; slot < k; ++slot) {
            // Slot 0 is the most significant qubit: bit weight 2^(k-1).
            const double weight = std::ldexp(1.0, k - 1 - slot);
            angles[static_cast<std::size_t>(slot)] =
                2.0 * std::numbers::pi * static_cast<double>(n) * weight / n_dim;
        }
        terms.push_back(build_term(cfg, n, std::move(angles)));
    }
    return terms;
}

std::vector<QftTerm> qft_factorization_variant(const QftConfig &cfg) {
    const int k = cfg.shape.qubits;
    const double denom = std::ldexp(1.0, k) - 1.0; // 2^k - 1
    std::vector<QftTerm> terms;
    terms.reserve(static_cast<std::size_t>(cfg.shape.dim));
    for (Index n = 0; n < cfg.shape.dim; ++n) {
        std::vector<double> angles(static_cast<std::size_t>(k));
        for (int slot = 0; slot < k; ++slot) {
            // Weight 2^j for j = 1..k, paired with the same slot order.
            const double weight = std::ldexp(1.0, k - slot);
            angles[static_cast<std::size_t>(slot)] =
                std::numbers::pi * static_cast<double>(n) * weight / denom;
        }
        terms.push_back(build_term(cfg, n, std::move(angles)));
    }
    return terms;
}

QcpuNetwork qft_network(const QftConfig &cfg) {
    std::vector<QcpuNetwork> blocks;
    blocks.reserve(static_cast<std::size_t>(cfg.shape.dim));
    for (const QftTerm &term : qft_factorization(cfg))
        blocks.push_back(
            qcpu_of(term.matrix, "B(" + std::to_string(term.n) + ")HM"));
    QcpuNetwork composed = sum_compose(blocks);
    return QcpuNetwork(composed.shape(), composed.factors(),
                       "F(k=" + std::to_string(cfg.shape.qubits) + ")");
}

} // namespace qcpu
