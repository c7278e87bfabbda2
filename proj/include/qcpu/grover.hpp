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
 * Amplitude-amplification search over an unstructured register.
 *
 * One iteration reflects about the target (R2 = I - 2|j><j|) and then about
 * the uniform superposition (R1 = F^-1 R0 F with R0 = 2|0><0| - I). After
 * t = floor(pi/4 * sqrt(N)) iterations the target probability is
 * sin^2((2t+1) * arcsin(1/sqrt(N))).
 *
 * Because R0 and R2 are diagonal, their networks collapse to two-factor
 * exponential products (see grover_qcpu_r0/r2). A circulating form of the
 * R2 product carries a superfluous leading identity block which shifts the
 * register block by +I; grover_qcpu_r2_defective reproduces it so the
 * verification suite can report the discrepancy.
 */

#pragma once

#include "qcpu/complex_matrix.hpp"
#include "qcpu/qcpu.hpp"

#include <cstdint>
#include <vector>

namespace qcpu {

/// Dense connector chains get expensive fast; the search network is capped
/// at this many register qubits.
inline constexpr int kGroverDenseQubitCap = 8;

struct GroverConfig {
    RegisterShape shape;
    Index target = 0;
    int iterations = 0;

    /// iterations <= 0 selects the default floor(pi/4 * sqrt(N)).
    static GroverConfig make(int k, Index target, int iterations = -1);
    static int default_iterations(Index dim);
};

/// 2|0><0| - I (diagonal +-1, +1 only at index 0).
ComplexMatrix grover_r0(RegisterShape shape);

/// I - 2|j><j| (diagonal +-1, -1 only at the target).
ComplexMatrix grover_r2(RegisterShape shape, Index target);

/// Network of R0 as the exact two-exponential product
/// exp{2|0><0| (x) c_dag} exp{-I (x) c_dag} = I + R0 (x) c_dag.
ComplexMatrix grover_qcpu_r0(RegisterShape shape);

/// Network of R2 as exp{-2|j><j| (x) c_dag} exp{I (x) c_dag}
/// = I + R2 (x) c_dag.
ComplexMatrix grover_qcpu_r2(RegisterShape shape, Index target);

/// The defective variant with a leading Q(I) factor; equals
/// I + (2I - 2|j><j|) (x) c_dag, i.e. the register block is off by +I.
ComplexMatrix grover_qcpu_r2_defective(RegisterShape shape, Index target);

/// Full search network: connector chain over
/// [F^-1, R0, F, R2] x iterations followed by the Hadamard preparation
/// (rightmost operand applied first). Register block is (R1 R2)^t H.
ComposedNetwork grover_network(const GroverConfig &cfg);

/// sin^2((2t+1) * arcsin(1/sqrt(N))).
double grover_success_probability(Index dim, int iterations);

struct GroverRun {
    GroverConfig config;
    std::vector<double> distribution; ///< register distribution, sums to 1
    Index outcome = 0;                ///< sampled basis index
    double target_probability = 0.0;
    cplx target_amplitude{0.0, 0.0};
};

/// Builds the network, postselects the auxiliary |1> branch and samples one
/// register measurement.
GroverRun run_grover(const GroverConfig &cfg, std::uint64_t seed);

} // namespace qcpu
