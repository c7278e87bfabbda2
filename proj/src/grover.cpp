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

#include "qcpu/grover.hpp"

#include "qcpu/gates.hpp"
#include "qcpu/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcpu {

GroverConfig GroverConfig::make(int k, Index target, int iterations) {
    if (k < 1)
        throw ConfigError("grover needs at least one register qubit");
    GroverConfig cfg;
    cfg.shape = RegisterShape::of_qubits(k);
    if (target < 0 || target >= cfg.shape.dim)
        throw IndexError("target index " + std::to_string(target) +
                         " outside register of dimension " +
                         std::to_string(cfg.shape.dim));
    cfg.target = target;
    cfg.iterations =
        iterations >= 0 ? iterations : default_iterations(cfg.shape.dim);
    return cfg;
}

int GroverConfig::default_iterations(Index dim) {
    return static_cast<int>(std::floor(
        std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(dim))));
}

ComplexMatrix grover_r0(RegisterShape shape) {
    ComplexMatrix r0(shape.dim, shape.dim);
    for (Index i = 0; i < shape.dim; ++i)
        r0(i, i) = (i == 0) ? 1.0 : -1.0;
    return r0;
}

ComplexMatrix grover_r2(RegisterShape shape, Index target) {
    if (target < 0 || target >= shape.dim)
        throw IndexError("target index outside register");
    ComplexMatrix r2(shape.dim, shape.dim);
    for (Index i = 0; i < shape.dim; ++i)
        r2(i, i) = (i == target) ? -1.0 : 1.0;
    return r2;
}

namespace {

/// exp{D (x) c_dag} for any register operator D: exact, I + D (x) c_dag.
ComplexMatrix nilpotent_exp(const ComplexMatrix &d) {
    const Index n = d.rows();
    ComplexMatrix out = ComplexMatrix::identity(2 * n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
            out(2 * r + 1, 2 * c) += d(r, c);
    return out;
}

} // namespace

ComplexMatrix grover_qcpu_r0(RegisterShape shape) {
    const ComplexMatrix first = nilpotent_exp(scale(2.0, outer(0, 0, shape.dim)));
    const ComplexMatrix second =
        nilpotent_exp(scale(-1.0, ComplexMatrix::identity(shape.dim)));
    return matmul(first, second);
}

ComplexMatrix grover_qcpu_r2(RegisterShape shape, Index target) {
    const ComplexMatrix first =
        nilpotent_exp(scale(-2.0, outer(target, target, shape.dim)));
    const ComplexMatrix second = nilpotent_exp(ComplexMatrix::identity(shape.dim));
    return matmul(first, second);
}

ComplexMatrix grover_qcpu_r2_defective(RegisterShape shape, Index target) {
    const ComplexMatrix leading = nilpotent_exp(ComplexMatrix::identity(shape.dim));
    return matmul(leading, grover_qcpu_r2(shape, target));
}

ComposedNetwork grover_network(const GroverConfig &cfg) {
    if (cfg.shape.qubits > kGroverDenseQubitCap)
        throw CapError("grover dense network capped at k = " +
                       std::to_string(kGroverDenseQubitCap) + ", got k = " +
                       std::to_string(cfg.shape.qubits));
    std::vector<ComplexMatrix> operands;
    std::vector<std::string> labels;
    const ComplexMatrix f = fourier_matrix(cfg.shape);
    const ComplexMatrix f_inv = fourier_inverse(cfg.shape);
    const ComplexMatrix r0 = grover_r0(cfg.shape);
    const ComplexMatrix r2 = grover_r2(cfg.shape, cfg.target);
    for (int t = 0; t < cfg.iterations; ++t) {
        operands.push_back(f_inv);
        labels.push_back("F^-1");
        operands.push_back(r0);
        labels.push_back("R0");
        operands.push_back(f);
        labels.push_back("F");
        operands.push_back(r2);
        labels.push_back("R2");
    }
    operands.push_back(hadamard_layer(cfg.shape.qubits));
    labels.push_back("H");
    return product_compose(operands, labels);
}

double grover_success_probability(Index dim, int iterations) {
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(dim)));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

GroverRun run_grover(const GroverConfig &cfg, std::uint64_t seed) {
    const ComposedNetwork network = grover_network(cfg);
    const StateVector input = tensor(StateVector::basis(cfg.shape.dim, 0),
                                     StateVector::basis(2, 0));
    const StateVector output = apply(network.op(), input);
    const PostselectResult post = postselect_aux(output, 1);
    if (!post.state)
        throw Error("grover: empty auxiliary |1> branch");

    GroverRun run;
    run.config = cfg;
    run.distribution.resize(static_cast<std::size_t>(cfg.shape.dim));
    for (Index i = 0; i < cfg.shape.dim; ++i)
        run.distribution[static_cast<std::size_t>(i)] = std::norm((*post.state)[i]);
    run.target_probability =
        run.distribution[static_cast<std::size_t>(cfg.target)];
    run.target_amplitude = (*post.state)[cfg.target];

    Rng rng = Rng::stream(seed, "grover");
    run.outcome = static_cast<Index>(rng.sample_index(run.distribution));
    return run;
}

} // namespace qcpu
