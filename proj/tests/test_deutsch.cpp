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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcpu/deutsch.hpp"
#include "qcpu/gates.hpp"

#include <cmath>

using namespace qcpu;

TEST_CASE("two-qubit operator for the four functions") {
    SUBCASE("f1 is the identity") {
        CHECK(approx_equal(deutsch_u(DeutschFunction::from_name("f1")),
                           ComplexMatrix::identity(4), 0.0));
    }
    SUBCASE("f2 is diag(1,-1,1,-1)") {
        const ComplexMatrix expected = ComplexMatrix::from_rows(
            {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
        CHECK(approx_equal(deutsch_u(DeutschFunction::from_name("f2")),
                           expected, 0.0));
    }
    SUBCASE("f3 swaps basis states 1 and 3") {
        const ComplexMatrix u = deutsch_u(DeutschFunction::from_name("f3"));
        CHECK(approx_equal(apply(u, StateVector::basis(4, 1)),
                           StateVector::basis(4, 3), 0.0));
        CHECK(approx_equal(apply(u, StateVector::basis(4, 3)),
                           StateVector::basis(4, 1), 0.0));
        CHECK(approx_equal(apply(u, StateVector::basis(4, 0)),
                           StateVector::basis(4, 0), 0.0));
    }
    SUBCASE("f4 swaps 1 and 3 with negated amplitudes") {
        const ComplexMatrix u = deutsch_u(DeutschFunction::from_name("f4"));
        CHECK(u(1, 3) == cplx{-1, 0});
        CHECK(u(3, 1) == cplx{-1, 0});
        CHECK(u(1, 1) == cplx{0, 0});
    }
}

TEST_CASE("tensor-sum decomposition matches entrywise") {
    for (const DeutschFunction &f : DeutschFunction::all())
        CHECK(max_abs_diff(deutsch_u(f), deutsch_u_decomposed(f)) == 0.0);
}

TEST_CASE("single-qubit reduction") {
    CHECK(approx_equal(deutsch_v(DeutschFunction::from_name("f1")),
                       ComplexMatrix::identity(2), 0.0));
    CHECK(approx_equal(deutsch_v(DeutschFunction::from_name("f4")),
                       scale(-1.0, pauli_x()), 0.0));
    for (const DeutschFunction &f : DeutschFunction::all())
        CHECK(unitarity_residual(deutsch_v(f)) <= 1e-15);
}

TEST_CASE("the two-qubit operator applies V conditioned on the second qubit") {
    for (const DeutschFunction &f : DeutschFunction::all()) {
        const ComplexMatrix u = deutsch_u(f);
        const ComplexMatrix v = deutsch_v(f);
        for (Index x = 0; x < 2; ++x) {
            // |x> (x) |1|: expect (V|x>) (x) |1>
            const StateVector in =
                tensor(StateVector::basis(2, x), StateVector::basis(2, 1));
            const StateVector expected =
                tensor(apply(v, StateVector::basis(2, x)),
                       StateVector::basis(2, 1));
            CHECK(max_abs_diff(apply(u, in), expected) == 0.0);
            // |x> (x) |0> is untouched
            const StateVector frozen =
                tensor(StateVector::basis(2, x), StateVector::basis(2, 0));
            CHECK(max_abs_diff(apply(u, frozen), frozen) == 0.0);
        }
    }
}

TEST_CASE("paper superposition value for H (x) H on |01>") {
    const StateVector state =
        apply(tensor(hadamard(), hadamard()), StateVector::basis(4, 1));
    const StateVector expected(
        4, {cplx{0.5, 0}, cplx{-0.5, 0}, cplx{0.5, 0}, cplx{-0.5, 0}});
    CHECK(max_abs_diff(state, expected) <= 1e-15);
}

TEST_CASE("end-to-end classification") {
    SUBCASE("f1 and f2 are constant") {
        for (const char *name : {"f1", "f2"}) {
            const DeutschResult r =
                run_deutsch(DeutschFunction::from_name(name));
            CHECK(!r.balanced);
            CHECK(r.output_bit == 0);
            CHECK(std::abs(r.outcome_probability - 1.0) <= 1e-12);
            CHECK(r.routes_agree);
        }
    }
    SUBCASE("f3 and f4 are balanced") {
        for (const char *name : {"f3", "f4"}) {
            const DeutschResult r =
                run_deutsch(DeutschFunction::from_name(name));
            CHECK(r.balanced);
            CHECK(r.output_bit == 1);
            CHECK(std::abs(r.outcome_probability - 1.0) <= 1e-12);
            CHECK(r.routes_agree);
        }
    }
    SUBCASE("f4 leaves the register in -|0>") {
        const DeutschResult r = run_deutsch(DeutschFunction::from_name("f4"));
        CHECK(std::abs(r.register_state[0] - cplx{-1.0, 0.0}) <= 1e-12);
        CHECK(std::abs(r.register_state[1]) <= 1e-12);
    }
}

TEST_CASE("network factors of the f3 reduction") {
    // V(f3) = sigma_x: exactly the two unit off-diagonal factors.
    const QcpuNetwork net = qcpu_of(deutsch_v(DeutschFunction::from_name("f3")));
    REQUIRE(net.factors().size() == 2);
    CHECK(net.factors()[0].m == 0);
    CHECK(net.factors()[0].n == 1);
    CHECK(net.factors()[0].coeff == cplx{1, 0});
    CHECK(net.factors()[1].m == 1);
    CHECK(net.factors()[1].n == 0);
    CHECK(net.factors()[1].coeff == cplx{1, 0});
}

TEST_CASE("unknown function names rejected") {
    CHECK_THROWS_AS(DeutschFunction::from_name("f5"), ConfigError);
}
