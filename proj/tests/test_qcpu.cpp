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

#include "qcpu/gates.hpp"
#include "qcpu/network_export.hpp"
#include "qcpu/qcpu.hpp"
#include "qcpu/rng.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <vector>

using namespace qcpu;

namespace {

ComplexMatrix random_matrix(Rng &rng, Index n) {
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m(i, j) = cplx{2.0 * rng.next_double() - 1.0,
                           2.0 * rng.next_double() - 1.0};
    return m;
}

/// Brute-force oracle: the ordered product of every factor exponential.
ComplexMatrix factor_product_oracle(const QcpuNetwork &net) {
    ComplexMatrix product = ComplexMatrix::identity(2 * net.shape().dim);
    for (const auto &f : net.factors())
        product = matmul(product, factor_matrix(f, net.shape()));
    return product;
}

int count_occurrences(const std::string &text, const std::string &needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("auxiliary ladder algebra is exactly fermionic") {
    const AuxiliaryAlgebra aux;
    CHECK(max_abs_diff(matmul(aux.c, aux.c), ComplexMatrix::zero(2, 2)) == 0.0);
    CHECK(max_abs_diff(matmul(aux.c_dag, aux.c_dag),
                       ComplexMatrix::zero(2, 2)) == 0.0);
    CHECK(max_abs_diff(matadd(matmul(aux.c, aux.c_dag),
                              matmul(aux.c_dag, aux.c)),
                       ComplexMatrix::identity(2)) == 0.0);
    CHECK(approx_equal(dagger(aux.c_dag), aux.c, 0.0));
}

TEST_CASE("factor matrix") {
    const RegisterShape shape = RegisterShape::of_qubits(1);

    SUBCASE("unit coefficient at (0,0)") {
        const ComplexMatrix m = factor_matrix({0, 0, 1.0}, shape);
        const ComplexMatrix expected = matadd(
            ComplexMatrix::identity(4), tensor(outer(0, 0, 2), outer(1, 0, 2)));
        CHECK(approx_equal(m, expected, 0.0));
    }

    SUBCASE("zero coefficient is the identity") {
        CHECK(approx_equal(factor_matrix({0, 1, 0.0}, shape),
                           ComplexMatrix::identity(4), 0.0));
    }

    SUBCASE("no cross terms between any two factors") {
        // (I + aM_f)(I + bM_g) = I + aM_f + bM_g: the dyad product carries
        // the squared raising operator, which vanishes.
        Rng rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const QcpuFactor f{static_cast<Index>(rng.next_u64() % 2),
                               static_cast<Index>(rng.next_u64() % 2),
                               cplx{rng.next_double(), rng.next_double()}};
            const QcpuFactor g{static_cast<Index>(rng.next_u64() % 2),
                               static_cast<Index>(rng.next_u64() % 2),
                               cplx{rng.next_double(), rng.next_double()}};
            const ComplexMatrix lhs =
                matmul(factor_matrix(f, shape), factor_matrix(g, shape));
            ComplexMatrix sum = ComplexMatrix::identity(4);
            sum(2 * f.m + 1, 2 * f.n) += f.coeff;
            sum(2 * g.m + 1, 2 * g.n) += g.coeff;
            CHECK(max_abs_diff(lhs, sum) <= 1e-15);
        }
    }
}

TEST_CASE("network extraction") {
    SUBCASE("zero operator yields no factors") {
        const QcpuNetwork net = qcpu_of(ComplexMatrix::zero(2, 2));
        CHECK(net.factors().empty());
        CHECK(approx_equal(closed_form(net), ComplexMatrix::identity(4), 0.0));
    }

    SUBCASE("sigma_x factor list") {
        const QcpuNetwork net = qcpu_of(pauli_x());
        REQUIRE(net.factors().size() == 2);
        CHECK(net.factors()[0].m == 0);
        CHECK(net.factors()[0].n == 1);
        CHECK(net.factors()[0].coeff == cplx{1, 0});
        CHECK(net.factors()[1].m == 1);
        CHECK(net.factors()[1].n == 0);
        CHECK(net.factors()[1].coeff == cplx{1, 0});
    }

    SUBCASE("rejects non-power-of-two dimensions") {
        CHECK_THROWS_AS(qcpu_of(ComplexMatrix(3, 3)), DimensionError);
        CHECK_THROWS_AS(qcpu_of(ComplexMatrix(2, 3)), DimensionError);
    }

    SUBCASE("round trip through reassemble") {
        Rng rng(17);
        const ComplexMatrix u = random_matrix(rng, 8);
        CHECK(max_abs_diff(reassemble(qcpu_of(u)), u) == 0.0);
    }
}

TEST_CASE("duplicate factors merge during canonicalization") {
    const RegisterShape shape = RegisterShape::of_qubits(1);
    const QcpuNetwork net(shape,
                          {{0, 1, cplx{0.5, 0}},
                           {1, 0, cplx{1, 0}},
                           {0, 1, cplx{0.25, 0}},
                           {1, 1, cplx{0, 0}}},
                          "merged");
    REQUIRE(net.factors().size() == 2); // zero factor dropped, (0,1) merged
    CHECK(net.factors()[0].m == 0);
    CHECK(net.factors()[0].n == 1);
    CHECK(net.factors()[0].coeff == cplx{0.75, 0});
    CHECK(net.factors()[1].m == 1);
}

TEST_CASE("closed form") {
    SUBCASE("action on basis states") {
        const StateVector in =
            tensor(StateVector::basis(2, 0), StateVector::basis(2, 0));
        const StateVector identity_out =
            apply(closed_form(qcpu_of(ComplexMatrix::identity(2))), in);
        // |0>|0>_A + |0>|1>_A
        CHECK(identity_out[0] == cplx{1, 0});
        CHECK(identity_out[1] == cplx{1, 0});
        CHECK(identity_out[2] == cplx{0, 0});
        CHECK(identity_out[3] == cplx{0, 0});

        const StateVector flip_out =
            apply(closed_form(qcpu_of(pauli_x())), in);
        // |0>|0>_A + |1>|1>_A
        CHECK(flip_out[0] == cplx{1, 0});
        CHECK(flip_out[1] == cplx{0, 0});
        CHECK(flip_out[2] == cplx{0, 0});
        CHECK(flip_out[3] == cplx{1, 0});
    }

    SUBCASE("matches the ordered factor product for random 4x4 operators") {
        Rng rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const QcpuNetwork net = qcpu_of(random_matrix(rng, 4));
            REQUIRE(net.factors().size() == 16);
            CHECK(max_abs_diff(factor_product_oracle(net), closed_form(net)) <=
                  1e-13);
        }
    }
}

TEST_CASE("sum composition") {
    SUBCASE("pauli sum gives the scaled hadamard") {
        const std::vector<QcpuNetwork> nets{qcpu_of(pauli_x()),
                                            qcpu_of(pauli_z())};
        const QcpuNetwork sum = sum_compose(nets);
        const ComplexMatrix expected =
            scale(std::numbers::sqrt2, hadamard());
        CHECK(max_abs_diff(reassemble(sum), expected) <= 1e-15);
        // And the factored product equals the composed closed form.
        const ComplexMatrix product = matmul(closed_form(nets[0]),
                                             closed_form(nets[1]));
        CHECK(max_abs_diff(product, closed_form(sum)) <= 1e-15);
    }

    SUBCASE("single operand is the identity composition") {
        Rng rng(29);
        const QcpuNetwork net = qcpu_of(random_matrix(rng, 4));
        const std::vector<QcpuNetwork> single{net};
        CHECK(max_abs_diff(closed_form(sum_compose(single)),
                           closed_form(net)) == 0.0);
    }

    SUBCASE("cancellation leaves the identity") {
        Rng rng(31);
        const ComplexMatrix u = random_matrix(rng, 2);
        const std::vector<QcpuNetwork> nets{qcpu_of(u), qcpu_of(scale(-1.0, u))};
        const QcpuNetwork sum = sum_compose(nets);
        CHECK(sum.factors().empty());
        CHECK(approx_equal(closed_form(sum), ComplexMatrix::identity(4), 0.0));
    }

    SUBCASE("shape mismatch rejected") {
        const std::vector<QcpuNetwork> nets{
            qcpu_of(ComplexMatrix::identity(2)),
            qcpu_of(ComplexMatrix::identity(4))};
        CHECK_THROWS_AS(sum_compose(nets), DimensionError);
    }
}

TEST_CASE("product composition") {
    SUBCASE("single operand reduces to the closed form") {
        Rng rng(37);
        const ComplexMatrix u = random_matrix(rng, 2);
        const std::vector<ComplexMatrix> us{u};
        CHECK(max_abs_diff(product_compose(us).op(),
                           closed_form(qcpu_of(u))) <= 1e-14);
    }

    SUBCASE("pauli product") {
        const std::vector<ComplexMatrix> us{pauli_x(), pauli_z()};
        const ComplexMatrix expected = matadd(
            ComplexMatrix::identity(4),
            tensor(matmul(pauli_x(), pauli_z()), outer(1, 0, 2)));
        CHECK(max_abs_diff(product_compose(us).op(), expected) <= 1e-15);
    }

    SUBCASE("identity chain") {
        const std::vector<ComplexMatrix> us(3, ComplexMatrix::identity(2));
        const ComplexMatrix expected =
            matadd(ComplexMatrix::identity(4),
                   tensor(ComplexMatrix::identity(2), outer(1, 0, 2)));
        CHECK(max_abs_diff(product_compose(us).op(), expected) <= 1e-15);
    }

    SUBCASE("operand order is right-to-left application") {
        // U1 U2 with U1 = |0><1|, U2 = sigma_x: product maps |0> -> |0>.
        const std::vector<ComplexMatrix> us{outer(0, 1, 2), pauli_x()};
        const ComplexMatrix block = product_compose(us).register_block();
        CHECK(max_abs_diff(block, matmul(outer(0, 1, 2), pauli_x())) <= 1e-15);
    }

    SUBCASE("empty list rejected") {
        const std::vector<ComplexMatrix> none;
        CHECK_THROWS_AS(product_compose(none), ConfigError);
    }
}

TEST_CASE("scalable composition") {
    SUBCASE("hadamard on |0> lands on the auxiliary |1> branch") {
        const std::vector<ComplexMatrix> us{hadamard()};
        const ScalableNetwork net = scalable_product(us);
        const StateVector out = net.apply_prepared(StateVector::basis(2, 0));
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        CHECK(std::abs(out[0]) <= 1e-15);             // |0>|0>_A
        CHECK(std::abs(out[1] - inv_sqrt2) <= 1e-15); // |0>|1>_A
        CHECK(std::abs(out[2]) <= 1e-15);             // |1>|0>_A
        CHECK(std::abs(out[3] - inv_sqrt2) <= 1e-15); // |1>|1>_A
    }

    SUBCASE("double flip returns the input on the out branch") {
        const std::vector<ComplexMatrix> us{pauli_x(), pauli_x()};
        const ScalableNetwork net = scalable_product(us);
        const StateVector out = net.apply_prepared(StateVector::basis(2, 1));
        CHECK(std::abs(out[3] - 1.0) <= 1e-15); // |1>|1>_A
        CHECK(std::abs(out[0]) + std::abs(out[1]) + std::abs(out[2]) <= 1e-15);
    }

    SUBCASE("the out operator annihilates the auxiliary |1> input sector") {
        const std::vector<ComplexMatrix> us{hadamard()};
        const ScalableNetwork net = scalable_product(us);
        StateVector aux_one(4);
        aux_one[1] = 1.0; // |0>|1>_A
        const StateVector out = apply(net.out_operator(), aux_one);
        CHECK(out.norm() <= 1e-15);
    }

    SUBCASE("total operator is identity (x) out block") {
        const std::vector<ComplexMatrix> us{pauli_x()};
        const ScalableNetwork net = scalable_product(us);
        const ComplexMatrix total = net.total_operator();
        CHECK(total.rows() == 2 * 4);
        CHECK(max_abs_diff(total, tensor(ComplexMatrix::identity(2),
                                         net.out_operator())) == 0.0);
    }

    SUBCASE("empty list rejected") {
        const std::vector<ComplexMatrix> none;
        CHECK_THROWS_AS(scalable_product(none), ConfigError);
    }
}

TEST_CASE("auxiliary postselection") {
    const StateVector in =
        tensor(StateVector::basis(2, 0), StateVector::basis(2, 0));

    SUBCASE("flip network") {
        const StateVector out = apply(closed_form(qcpu_of(pauli_x())), in);
        const PostselectResult one = postselect_aux(out, 1);
        REQUIRE(one.state.has_value());
        CHECK(one.probability == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(approx_equal(*one.state, StateVector::basis(2, 1), 1e-14));

        const PostselectResult zero = postselect_aux(out, 0);
        REQUIRE(zero.state.has_value());
        CHECK(zero.probability == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(approx_equal(*zero.state, StateVector::basis(2, 0), 1e-14));
    }

    SUBCASE("hadamard network") {
        const StateVector out = apply(closed_form(qcpu_of(hadamard())), in);
        const PostselectResult one = postselect_aux(out, 1);
        REQUIRE(one.state.has_value());
        CHECK(one.probability == doctest::Approx(1.0).epsilon(1e-14));
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        CHECK(std::abs((*one.state)[0] - inv_sqrt2) <= 1e-14);
        CHECK(std::abs((*one.state)[1] - inv_sqrt2) <= 1e-14);
    }

    SUBCASE("zero-probability branch flagged") {
        const PostselectResult empty = postselect_aux(in, 1);
        CHECK(empty.probability == 0.0);
        CHECK(!empty.state.has_value());
    }

    SUBCASE("odd dimension rejected") {
        CHECK_THROWS_AS(postselect_aux(StateVector::basis(3, 0), 1),
                        DimensionError);
        CHECK_THROWS_AS(postselect_aux(in, 2), ConfigError);
    }
}

TEST_CASE("connector matrices") {
    const Connector conn(4);
    CHECK(approx_equal(conn.lower(),
                       tensor(ComplexMatrix::identity(4), outer(0, 1, 2)),
                       0.0));
    CHECK(approx_equal(conn.raise(),
                       tensor(ComplexMatrix::identity(4), outer(1, 0, 2)),
                       0.0));
}

TEST_CASE("network export") {
    SUBCASE("text export lists one line per factor") {
        const std::string text =
            export_network(qcpu_of(pauli_x(), "X"), ExportFormat::Text);
        CHECK(count_occurrences(text, "factor (") == 2);
    }

    SUBCASE("dot export is a structurally valid digraph") {
        const std::string dot =
            export_network(qcpu_of(pauli_x(), "X"), ExportFormat::Dot);
        CHECK(dot.rfind("digraph", 0) == 0);
        CHECK(count_occurrences(dot, "{") == count_occurrences(dot, "}"));
        CHECK(count_occurrences(dot, "f_0_1") >= 1);
        CHECK(count_occurrences(dot, "f_1_0") >= 1);
    }

    SUBCASE("composed export carries the connector wrapping") {
        Rng rng(41);
        const std::vector<ComplexMatrix> us{random_matrix(rng, 2),
                                            random_matrix(rng, 2)};
        const ComposedNetwork net = product_compose(us);
        const std::string dot = export_network(net, ExportFormat::Dot);
        // Two blocks; five connector nodes: the outer raise, the closing
        // lower/raise pair, and one lower ahead of each block.
        CHECK(count_occurrences(dot, "shape=box3d") == 2);
        CHECK(count_occurrences(dot, "conn_") >= 5);
        CHECK(count_occurrences(dot, "[shape=circle, label=\"C†\"]") == 2);
        CHECK(count_occurrences(dot, "[shape=circle, label=\"C\"]") == 3);
    }

    SUBCASE("exports are deterministic") {
        const QcpuNetwork net = qcpu_of(hadamard(), "H");
        CHECK(export_network(net, ExportFormat::Dot) ==
              export_network(net, ExportFormat::Dot));
    }

    SUBCASE("unknown format rejected") {
        CHECK_THROWS_AS(parse_export_format("svg"), FormatError);
    }
}

TEST_CASE("pure operations are safe to run concurrently") {
    Rng rng(53);
    const ComplexMatrix u = random_matrix(rng, 8);
    const QcpuNetwork net = qcpu_of(u);
    const ComplexMatrix expected = closed_form(net);

    std::vector<std::future<ComplexMatrix>> tasks;
    for (int i = 0; i < 8; ++i)
        tasks.push_back(std::async(std::launch::async, [&net] {
            return closed_form(net);
        }));
    for (auto &task : tasks)
        CHECK(max_abs_diff(task.get(), expected) == 0.0);
}

TEST_CASE("composed network register block") {
    Rng rng(43);
    const std::vector<ComplexMatrix> us{random_matrix(rng, 4),
                                        random_matrix(rng, 4),
                                        random_matrix(rng, 4)};
    const ComposedNetwork net = product_compose(us);
    const ComplexMatrix expected =
        matmul(us[0], matmul(us[1], us[2]));
    CHECK(max_abs_diff(net.register_block(), expected) <= 1e-13);
}
