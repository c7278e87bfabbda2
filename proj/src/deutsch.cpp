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

#include "qcpu/deutsch.hpp"

#include "qcpu/gates.hpp"

#include <cmath>

namespace qcpu {

DeutschFunction DeutschFunction::from_name(const std::string &name) {
    if (name == "f1")
        return {0, 0};
    if (name == "f2")
        return {1, 1};
    if (name == "f3")
        return {0, 1};
    if (name == "f4")
        return {1, 0};
    throw ConfigError("unknown function name: " + name +
                      " (expected f1|f2|f3|f4)");
}

std::array<DeutschFunction, 4> DeutschFunction::all() {
    return {DeutschFunction{0, 0}, DeutschFunction{1, 1}, DeutschFunction{0, 1},
            DeutschFunction{1, 0}};
}

std::string DeutschFunction::name() const {
    if (f0 == 0 && f1 == 0)
        return "f1";
    if (f0 == 1 && f1 == 1)
        return "f2";
    if (f0 == 0 && f1 == 1)
        return "f3";
    return "f4";
}

int DeutschFunction::epsilon() const {
    if (f0 == 0 && f1 == 1)
        return 1;
    if (f0 == 1 && f1 == 0)
        return -1;
    return 0;
}

ComplexMatrix deutsch_u(DeutschFunction f) {
    const double d = f.sign() * f.delta();
    const double e = f.epsilon();
    return ComplexMatrix::from_rows({{1, 0, 0, 0},
                                     {0, d, 0, e},
                                     {0, 0, 1, 0},
                                     {0, e, 0, d}});
}

ComplexMatrix deutsch_u_decomposed(DeutschFunction f) {
    const cplx d = static_cast<double>(f.sign() * f.delta());
    const cplx e = static_cast<double>(f.epsilon());
    const ComplexMatrix left = tensor(
        ComplexMatrix::identity(2), ComplexMatrix::from_rows({{1, 0}, {0, d}}));
    const ComplexMatrix right =
        tensor(pauli_x(), ComplexMatrix::from_rows({{0, 0}, {0, e}}));
    return matadd(left, right);
}

ComplexMatrix deutsch_v(DeutschFunction f) {
    const cplx d = static_cast<double>(f.sign() * f.delta());
    const cplx e = static_cast<double>(f.epsilon());
    return ComplexMatrix::from_rows({{d, e}, {e, d}});
}

ComplexMatrix deutsch_oracle_gate(DeutschFunction f) {
    // |i,j> -> |i, j ^ f(i)>, index = 2i + j.
    ComplexMatrix u(4, 4);
    const int fx[2] = {f.f0, f.f1};
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j)
            u(2 * i + (j ^ fx[i]), 2 * i + j) = 1.0;
    return u;
}

namespace {

/// Textbook route: returns the measured first-qubit bit (deterministic for
/// all four functions).
int textbook_first_qubit(DeutschFunction f) {
    const ComplexMatrix hh = tensor(hadamard(), hadamard());
    StateVector state = StateVector::basis(4, 1); // |01>
    state = apply(hh, state);
    state = apply(deutsch_oracle_gate(f), state);
    state = apply(hh, state);
    // First qubit is the most significant bit of the index.
    const double p_first_one =
        std::norm(state[2]) + std::norm(state[3]);
    return p_first_one > 0.5 ? 1 : 0;
}

} // namespace

DeutschResult run_deutsch(DeutschFunction f) {
    // Network route: Q(V) on |1> (x) |0>_A, read the auxiliary |1> branch.
    const QcpuNetwork network = qcpu_of(deutsch_v(f), "V(" + f.name() + ")");
    const StateVector input =
        tensor(StateVector::basis(2, 1), StateVector::basis(2, 0));
    const StateVector output = apply(closed_form(network), input);
    const PostselectResult post = postselect_aux(output, 1);
    if (!post.state)
        throw Error("deutsch: empty auxiliary |1> branch");

    DeutschResult result;
    result.function = f;
    result.register_state = *post.state;
    // Constant functions leave the register on |1>, balanced move it to |0>.
    const double p0 = std::norm(result.register_state[0]);
    const double p1 = std::norm(result.register_state[1]);
    result.balanced = p0 > p1;
    result.outcome_probability = result.balanced ? p0 : p1;
    result.output_bit = result.balanced ? 1 : 0;

    const int textbook_bit = textbook_first_qubit(f);
    result.routes_agree = (textbook_bit == result.output_bit);
    if (!result.routes_agree)
        throw Error("deutsch: network route and textbook route disagree for " +
                    f.name());
    return result;
}

} // namespace qcpu
