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

#include "qcpu/qcpu.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qcpu {
namespace {

constexpr cplx kZero{0.0, 0.0};

RegisterShape common_shape(std::span<const ComplexMatrix> us,
                           const char *what) {
    if (us.empty())
        throw ConfigError(std::string(what) + ": empty operand list");
    const Index dim = us.front().rows();
    for (const auto &u : us) {
        if (!u.is_square() || u.rows() != dim)
            throw DimensionError(std::string(what) +
                                 ": operands must be square with equal dims");
    }
    RegisterShape shape = RegisterShape::from_dim(dim);
    if (2 * dim > kMaxDenseDim)
        throw CapError(std::string(what) + ": combined dimension " +
                       std::to_string(2 * dim) + " exceeds the dense cap");
    return shape;
}

std::string label_for(std::span<const std::string> labels, std::size_t i) {
    return i < labels.size() ? labels[i] : "U" + std::to_string(i + 1);
}

} // namespace

// ---- auxiliary algebra ----------------------------------------------------

AuxiliaryAlgebra::AuxiliaryAlgebra()
    : c(outer(0, 1, 2)), c_dag(outer(1, 0, 2)), p0(outer(0, 0, 2)),
      p1(outer(1, 1, 2)) {}

Connector::Connector(Index register_dim) : register_dim(register_dim) {
    if (register_dim <= 0 || 2 * register_dim > kMaxDenseDim)
        throw CapError("connector register dimension out of range");
}

ComplexMatrix Connector::lower() const {
    return tensor(ComplexMatrix::identity(register_dim), outer(0, 1, 2));
}

ComplexMatrix Connector::raise() const {
    return tensor(ComplexMatrix::identity(register_dim), outer(1, 0, 2));
}

// ---- networks -------------------------------------------------------------

QcpuNetwork::QcpuNetwork(RegisterShape shape, std::vector<QcpuFactor> factors,
                         std::string label)
    : shape_(shape), factors_(std::move(factors)), label_(std::move(label)) {
    for (const auto &f : factors_) {
        if (f.m < 0 || f.m >= shape_.dim || f.n < 0 || f.n >= shape_.dim)
            throw IndexError("factor index outside register dimension");
        if (!std::isfinite(f.coeff.real()) || !std::isfinite(f.coeff.imag()))
            throw ConfigError("factor coefficient must be finite");
    }
    // Canonical order: row-major over (m, n); duplicates merge.
    std::sort(factors_.begin(), factors_.end(),
              [](const QcpuFactor &a, const QcpuFactor &b) {
                  return std::pair{a.m, a.n} < std::pair{b.m, b.n};
              });
    std::vector<QcpuFactor> merged;
    merged.reserve(factors_.size());
    for (const auto &f : factors_) {
        if (!merged.empty() && merged.back().m == f.m && merged.back().n == f.n)
            merged.back().coeff += f.coeff;
        else
            merged.push_back(f);
    }
    std::erase_if(merged, [](const QcpuFactor &f) { return f.coeff == kZero; });
    factors_ = std::move(merged);
}

ComplexMatrix factor_matrix(const QcpuFactor &factor, RegisterShape shape) {
    if (factor.m < 0 || factor.m >= shape.dim || factor.n < 0 ||
        factor.n >= shape.dim)
        throw IndexError("factor index outside register dimension");
    // exp{coeff |m><n| (x) c_dag} truncates after the linear term: the
    // exponent contains c_dag, whose square is zero.
    ComplexMatrix out = ComplexMatrix::identity(2 * shape.dim);
    out(2 * factor.m + 1, 2 * factor.n) += factor.coeff;
    return out;
}

QcpuNetwork qcpu_of(const ComplexMatrix &u, std::string label) {
    if (!u.is_square())
        throw DimensionError("qcpu_of: operator must be square");
    RegisterShape shape = RegisterShape::from_dim(u.rows());
    if (2 * shape.dim > kMaxDenseDim)
        throw CapError("qcpu_of: combined dimension exceeds the dense cap");
    std::vector<QcpuFactor> factors;
    for (Index m = 0; m < shape.dim; ++m)
        for (Index n = 0; n < shape.dim; ++n)
            if (u(m, n) != kZero)
                factors.push_back({m, n, u(m, n)});
    return QcpuNetwork(shape, std::move(factors), std::move(label));
}

ComplexMatrix reassemble(const QcpuNetwork &network) {
    ComplexMatrix u(network.shape().dim, network.shape().dim);
    for (const auto &f : network.factors())
        u(f.m, f.n) += f.coeff;
    return u;
}

ComplexMatrix closed_form(const QcpuNetwork &network) {
    const Index n = network.shape().dim;
    ComplexMatrix out = ComplexMatrix::identity(2 * n);
    for (const auto &f : network.factors())
        out(2 * f.m + 1, 2 * f.n) += f.coeff;
    return out;
}

QcpuNetwork sum_compose(std::span<const QcpuNetwork> networks) {
    if (networks.empty())
        throw ConfigError("sum_compose: empty operand list");
    const RegisterShape shape = networks.front().shape();
    std::string label;
    ComplexMatrix total(shape.dim, shape.dim);
    for (const auto &net : networks) {
        if (net.shape().dim != shape.dim)
            throw DimensionError("sum_compose: register shapes differ");
        total = matadd(total, reassemble(net));
        if (!net.label().empty()) {
            if (!label.empty())
                label += " + ";
            label += net.label();
        }
    }
    return qcpu_of(total, std::move(label));
}

// ---- composed (product-rule) networks --------------------------------------

ComposedNetwork::ComposedNetwork(RegisterShape shape, ComplexMatrix op,
                                 std::vector<TraceStep> trace)
    : shape_(shape), op_(std::move(op)), trace_(std::move(trace)) {
    if (op_.rows() != 2 * shape_.dim || op_.cols() != 2 * shape_.dim)
        throw DimensionError("composed operator must be 2N x 2N");
}

ComplexMatrix ComposedNetwork::register_block() const {
    const Index n = shape_.dim;
    ComplexMatrix block(n, n);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
            block(r, c) = op_(2 * r + 1, 2 * c);
    return block;
}

namespace {

// Shared by product_compose and scalable_product: evaluates the literal
// chain C_dag (prod_j C Q(U_j)) C C_dag with dense multiplications and
// returns it with its trace. The leading identity of the product rule is
// NOT included here.
std::pair<ComplexMatrix, std::vector<TraceStep>>
connector_chain(std::span<const ComplexMatrix> us,
                std::span<const std::string> labels, RegisterShape shape) {
    const Connector connector(shape.dim);
    const ComplexMatrix c_low = connector.lower();
    const ComplexMatrix c_raise = connector.raise();

    // Matrix order, left to right:
    //   C_dag, C Q(U_1), C Q(U_2), ..., C Q(U_r), C, C_dag
    ComplexMatrix chain = c_raise;
    for (std::size_t j = 0; j < us.size(); ++j) {
        chain = matmul(chain, c_low);
        chain = matmul(chain, closed_form(qcpu_of(us[j])));
    }
    chain = matmul(chain, c_low);
    chain = matmul(chain, c_raise);

    // Trace in application order (rightmost factor acts first):
    //   C_dag, C, Q(U_r), C, Q(U_{r-1}), ..., C, Q(U_1), C, C_dag
    std::vector<TraceStep> trace;
    trace.push_back({TraceStep::Kind::ConnectorRaise, -1, ""});
    trace.push_back({TraceStep::Kind::ConnectorLower, -1, ""});
    for (std::size_t j = us.size(); j-- > 0;) {
        trace.push_back({TraceStep::Kind::Block, static_cast<int>(j),
                         label_for(labels, j)});
        trace.push_back({TraceStep::Kind::ConnectorLower, -1, ""});
    }
    trace.push_back({TraceStep::Kind::ConnectorRaise, -1, ""});
    return {std::move(chain), std::move(trace)};
}

} // namespace

ComposedNetwork product_compose(std::span<const ComplexMatrix> us,
                                std::span<const std::string> labels) {
    const RegisterShape shape = common_shape(us, "product_compose");
    auto [chain, trace] = connector_chain(us, labels, shape);
    ComplexMatrix op = matadd(ComplexMatrix::identity(2 * shape.dim), chain);
    return ComposedNetwork(shape, std::move(op), std::move(trace));
}

// ---- scalable networks -----------------------------------------------------

ScalableNetwork::ScalableNetwork(Index input_dim, ComposedNetwork chain)
    : input_dim_(input_dim), chain_(std::move(chain)),
      out_op_(matsub(chain_.op(),
                     ComplexMatrix::identity(chain_.op().rows()))) {}

ComplexMatrix ScalableNetwork::total_operator() const {
    if (input_dim_ * out_op_.rows() > kMaxDenseDim)
        throw CapError("total operator exceeds the dense cap; "
                       "use apply_prepared instead");
    return tensor(ComplexMatrix::identity(input_dim_), out_op_);
}

StateVector ScalableNetwork::apply_prepared(const StateVector &psi) const {
    if (psi.dim() != chain_.shape().dim)
        throw DimensionError("prepared state dimension mismatch");
    StateVector combined(2 * psi.dim());
    for (Index i = 0; i < psi.dim(); ++i)
        combined[2 * i] = psi[i]; // aux |0>
    return apply(out_op_, combined);
}

ScalableNetwork scalable_product(std::span<const ComplexMatrix> us,
                                 std::span<const std::string> labels) {
    const RegisterShape shape = common_shape(us, "scalable_product");
    auto [chain, trace] = connector_chain(us, labels, shape);
    // The out block is the bare chain; re-derive the composed wrapper from
    // it so the stored ComposedNetwork still satisfies op = I + chain.
    ComplexMatrix op = matadd(ComplexMatrix::identity(2 * shape.dim), chain);
    ComposedNetwork composed(shape, std::move(op), std::move(trace));
    return ScalableNetwork(shape.dim, std::move(composed));
}

// ---- measurement -----------------------------------------------------------

PostselectResult postselect_aux(const StateVector &state, int outcome) {
    if (outcome != 0 && outcome != 1)
        throw ConfigError("auxiliary outcome must be 0 or 1");
    if (state.dim() % 2 != 0)
        throw DimensionError("state dimension must be even (register x aux)");
    const Index n = state.dim() / 2;
    StateVector projected(n);
    for (Index r = 0; r < n; ++r)
        projected[r] = state[2 * r + outcome];
    const double weight = projected.norm_squared();
    PostselectResult result;
    result.probability = weight;
    if (weight > 0.0) {
        result.state = scale(1.0 / std::sqrt(weight), projected);
    }
    return result;
}

} // namespace qcpu
