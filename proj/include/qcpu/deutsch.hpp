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
 * Deutsch's problem: decide whether a one-bit function is constant or
 * balanced with a single oracle evaluation.
 *
 * Two routes are implemented and cross-checked:
 *  - the factor-network route: Q(V) applied to |1> (x) |0>_A, where V is
 *    the single-qubit reduction of the algorithm; the auxiliary |1> branch
 *    then carries V|1>, which is |1> (constant) or |0> (balanced) up to a
 *    sign;
 *  - the textbook route: H (x) H, the two-qubit oracle |i,j> -> |i, j^f(i)>,
 *    H (x) H again, then a measurement of the first qubit.
 */

#pragma once

#include "qcpu/complex_matrix.hpp"
#include "qcpu/qcpu.hpp"

#include <array>
#include <string>

namespace qcpu {

/// One of the four one-bit functions, by its values (f(0), f(1)).
struct DeutschFunction {
    int f0 = 0;
    int f1 = 0;

    /// "f1": (0,0)  "f2": (1,1)  "f3": (0,1)  "f4": (1,0)
    static DeutschFunction from_name(const std::string &name);
    static std::array<DeutschFunction, 4> all();

    std::string name() const;
    bool is_constant() const { return f0 == f1; }

    /// 1 when f(0) == f(1), else 0.
    int delta() const { return f0 == f1 ? 1 : 0; }
    /// Antisymmetric coefficient: +1 for (0,1), -1 for (1,0), else 0.
    int epsilon() const;
    /// (-1)^{f(0)}
    int sign() const { return f0 == 0 ? 1 : -1; }
};

/// The 4x4 two-qubit operator of the algorithm written as one matrix:
/// conditional application of deutsch_v to the first qubit when the second
/// qubit is |1>.
ComplexMatrix deutsch_u(DeutschFunction f);

/// Same operator assembled from its tensor-sum decomposition
/// I (x) diag(1, sign*delta) + sigma_x (x) diag(0, epsilon); equals
/// deutsch_u entrywise exactly.
ComplexMatrix deutsch_u_decomposed(DeutschFunction f);

/// Single-qubit reduction [[sign*delta, eps], [eps, sign*delta]]; unitary
/// for all four functions.
ComplexMatrix deutsch_v(DeutschFunction f);

/// Textbook two-qubit oracle |i,j> -> |i, j ^ f(i)| (first qubit = most
/// significant bit). Used by the cross-check route.
ComplexMatrix deutsch_oracle_gate(DeutschFunction f);

struct DeutschResult {
    DeutschFunction function;
    bool balanced = false;
    int output_bit = 0; ///< 0 = constant, 1 = balanced
    StateVector register_state;  ///< postselected single-qubit state
    double outcome_probability = 0.0;
    bool routes_agree = false; ///< network route vs textbook route
};

/// Runs both routes; throws Error if they disagree on the classification.
DeutschResult run_deutsch(DeutschFunction f);

} // namespace qcpu
