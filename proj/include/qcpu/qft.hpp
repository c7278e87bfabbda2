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
 * Rank-one factorization of the discrete Fourier matrix.
 *
 * Column n of F is a product state: a per-qubit phase layer B(n) applied to
 * the uniform superposition. The matrix therefore splits into N rank-one
 * terms
 *
 *     F = sum_n B(n) H |0><n|,
 *
 * each of which becomes one factor block of a network; the sum rule turns
 * the product of those blocks into Q(F).
 *
 * The phase angle for the qubit carrying bit weight 2^w is
 * 2*pi*n*2^w / 2^k. A historically circulating variant divides by 2^k - 1
 * and indexes the weights off by one; it is provided as
 * qft_factorization_variant so the verification suite can demonstrate that
 * its term sum does NOT reproduce F.
 */

#pragma once

#include "qcpu/complex_matrix.hpp"
#include "qcpu/qcpu.hpp"

#include <vector>

namespace qcpu {

struct QftConfig {
    RegisterShape shape;

    static QftConfig of_qubits(int k);
};

/// One rank-one term B(n) H |0><n| plus its per-qubit phase angles
/// (indexed by tensor slot, most significant qubit first).
struct QftTerm {
    Index n = 0;
    std::vector<double> angles;
    ComplexMatrix matrix;
};

/// The N rank-one terms; their sum equals fourier_matrix(shape).
std::vector<QftTerm> qft_factorization(const QftConfig &cfg);

/// The defective variant with denominator 2^k - 1 (sum does not equal F).
std::vector<QftTerm> qft_factorization_variant(const QftConfig &cfg);

/// Network for F via sum-rule composition of the rank-one terms; its
/// closed form is I + F (x) c_dag.
QcpuNetwork qft_network(const QftConfig &cfg);

} // namespace qcpu
