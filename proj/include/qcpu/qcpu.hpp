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
 * Factor networks over a register tensored with one auxiliary qubit.
 *
 * A network Q(U) for an N x N operator U is the product, over all nonzero
 * entries U_mn, of the factors
 *
 *     exp{ U_mn |m><n| (x) c_dag } = I + U_mn |m><n| (x) c_dag,
 *
 * where c_dag = |1><0| on the auxiliary qubit. c_dag squares to zero, so the
 * exponentials truncate exactly, every cross term between factors vanishes,
 * and the whole product collapses to the closed form
 *
 *     Q(U) = I (x) I_A + U (x) c_dag.
 *
 * Acting on |psi> (x) |0>_A this writes U|psi> onto the auxiliary |1>
 * branch. Two composition rules follow:
 *
 *  - sum rule:      Q(U_1) Q(U_2) ... Q(U_r) = Q(U_1 + ... + U_r)
 *  - product rule:  Q(U_1 U_2 ... U_r) =
 *        I + C_dag (prod_j C Q(U_j)) C C_dag,
 *    where the connectors C = I (x) c and C_dag = I (x) c_dag reset the
 *    auxiliary qubit between successive blocks.
 *
 * The auxiliary qubit sits in the least significant tensor slot throughout:
 * a combined index is 2 * register_index + aux_bit.
 */

#pragma once

#include "qcpu/complex_matrix.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcpu {

/// The 2x2 auxiliary-qubit ladder algebra. Entries are exact 0/1.
struct AuxiliaryAlgebra {
    ComplexMatrix c;     ///< |0><1|
    ComplexMatrix c_dag; ///< |1><0|
    ComplexMatrix p0;    ///< |0><0|
    ComplexMatrix p1;    ///< |1><1|

    AuxiliaryAlgebra();
};

/// Connectors lifted to the register (x) auxiliary space.
struct Connector {
    Index register_dim;

    explicit Connector(Index register_dim);

    ComplexMatrix lower() const; ///< I_R (x) c,     2N x 2N
    ComplexMatrix raise() const; ///< I_R (x) c_dag, 2N x 2N
};

/// One factor of a network: coefficient attached to |m><n|.
struct QcpuFactor {
    Index m = 0;
    Index n = 0;
    cplx coeff{0.0, 0.0};
};

/// A factor network for one register operator.
class QcpuNetwork {
  public:
    QcpuNetwork(RegisterShape shape, std::vector<QcpuFactor> factors,
                std::string label);

    const RegisterShape &shape() const { return shape_; }
    const std::vector<QcpuFactor> &factors() const { return factors_; }
    const std::string &label() const { return label_; }

  private:
    RegisterShape shape_;
    std::vector<QcpuFactor> factors_; // canonical: row-major, unique, nonzero
    std::string label_;
};

/// The single factor matrix I + coeff * (|m><n| (x) c_dag), exact.
ComplexMatrix factor_matrix(const QcpuFactor &factor, RegisterShape shape);

/// Network with one factor per nonzero entry of u (row-major order).
/// u must be square with power-of-two dimension; it need not be unitary.
QcpuNetwork qcpu_of(const ComplexMatrix &u, std::string label = "");

/// Reassembles the register operator U from the factor list.
ComplexMatrix reassemble(const QcpuNetwork &network);

/// I + U (x) c_dag on the 2N-dimensional combined space.
ComplexMatrix closed_form(const QcpuNetwork &network);

/// Sum rule: the network of the operand sum. Shapes must agree.
QcpuNetwork sum_compose(std::span<const QcpuNetwork> networks);

/// One step of a connector chain, for trace/export purposes.
struct TraceStep {
    enum class Kind { ConnectorLower, ConnectorRaise, Block };
    Kind kind;
    int block_index;   ///< operand position for Block steps, -1 otherwise
    std::string label; ///< operand label for Block steps
};

/// Product-rule result: dense operator on the combined space plus the
/// literal connector chain that built it (in application order).
class ComposedNetwork {
  public:
    ComposedNetwork(RegisterShape shape, ComplexMatrix op,
                    std::vector<TraceStep> trace);

    const RegisterShape &shape() const { return shape_; }
    const ComplexMatrix &op() const { return op_; }
    const std::vector<TraceStep> &trace() const { return trace_; }

    /// The N x N block mapping the aux |0> sector to the aux |1> sector;
    /// for a product-rule operator this is the composed register operator.
    ComplexMatrix register_block() const;

  private:
    RegisterShape shape_;
    ComplexMatrix op_;
    std::vector<TraceStep> trace_;
};

/// Product rule evaluated literally: the connector-chain matrices are
/// multiplied out at full 2N x 2N dimension, then the identity is added.
/// us = [U_1, ..., U_r] with U_r applied first to states.
ComposedNetwork product_compose(std::span<const ComplexMatrix> us,
                                std::span<const std::string> labels = {});

/// Scalable form: identity on an input register tensored with the
/// connector-chain operator (without the leading identity term) on the out
/// register. Applied to |psi>_in (x) (|psi> (x) |0>_A)_out it keeps the
/// input copy and places (prod U_j)|psi> (x) |1>_A in the out block.
class ScalableNetwork {
  public:
    ScalableNetwork(Index input_dim, ComposedNetwork chain);

    Index input_dim() const { return input_dim_; }
    const ComposedNetwork &chain() const { return chain_; }

    /// The out-block operator: chain minus the leading identity, = P (x) c_dag.
    const ComplexMatrix &out_operator() const { return out_op_; }

    /// Composed register operator P (same as chain().register_block()).
    ComplexMatrix register_block() const { return chain_.register_block(); }

    /// Dense I_input (x) out_operator; throws CapError when too large.
    ComplexMatrix total_operator() const;

    /// Applies the network to the prepared state
    /// |psi>_in (x) (|psi> (x) |0>_A)_out without building total_operator.
    /// Returns the out-block state (2N amplitudes); the input block is the
    /// unchanged |psi>.
    StateVector apply_prepared(const StateVector &psi) const;

  private:
    Index input_dim_;
    ComposedNetwork chain_;
    ComplexMatrix out_op_;
};

/// Scalable product over us (same operand convention as product_compose).
ScalableNetwork scalable_product(std::span<const ComplexMatrix> us,
                                 std::span<const std::string> labels = {});

/// Projection of a register (x) aux state onto an auxiliary outcome.
/// probability is the squared norm of the projected component; state is
/// the renormalized register state, absent when the probability is zero.
struct PostselectResult {
    double probability = 0.0;
    std::optional<StateVector> state;
};

PostselectResult postselect_aux(const StateVector &state, int outcome);

} // namespace qcpu
