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

// Scalar and AVX2 kernels must agree on random data, including lengths
// that exercise the vector tail.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcpu/complex_matrix.hpp"
#include "qcpu/errors.hpp"
#include "qcpu/kernels.hpp"
#include "qcpu/rng.hpp"

#include <vector>

using namespace qcpu;
using kernels::cplx;

namespace {

std::vector<cplx> random_array(Rng &rng, std::size_t n) {
    std::vector<cplx> out(n);
    for (auto &v : out)
        v = cplx{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    return out;
}

bool close(cplx a, cplx b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

} // namespace

TEST_CASE("scalar and avx2 kernels agree") {
    if (!kernels::avx2_available()) {
        MESSAGE("avx2 not available on this host; equivalence test skipped");
        return;
    }
    const auto &scalar = kernels::scalar_ops();
    const auto &avx2 = kernels::avx2_ops();
    Rng rng(2024);

    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 15u, 64u, 65u, 257u}) {
        CAPTURE(n);
        const auto x = random_array(rng, n);
        const auto y = random_array(rng, n);
        const cplx a{0.37, -1.21};

        auto dst_scalar = y;
        auto dst_avx2 = y;
        scalar.axpy(dst_scalar.data(), a, x.data(), n);
        avx2.axpy(dst_avx2.data(), a, x.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(close(dst_scalar[i], dst_avx2[i]));

        std::vector<cplx> scaled_scalar(n), scaled_avx2(n);
        scalar.scale(scaled_scalar.data(), a, x.data(), n);
        avx2.scale(scaled_avx2.data(), a, x.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(close(scaled_scalar[i], scaled_avx2[i]));

        std::vector<cplx> sum_scalar(n), sum_avx2(n);
        scalar.add(sum_scalar.data(), x.data(), y.data(), n);
        avx2.add(sum_avx2.data(), x.data(), y.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(sum_scalar[i] == sum_avx2[i]); // pure adds, bitwise equal

        CHECK(close(scalar.dot(x.data(), y.data(), n),
                    avx2.dot(x.data(), y.data(), n),
                    1e-12 * static_cast<double>(n + 1)));
        CHECK(scalar.norm2(x.data(), n) ==
              doctest::Approx(avx2.norm2(x.data(), n)).epsilon(1e-12));
        CHECK(scalar.norm2_diff(x.data(), y.data(), n) ==
              doctest::Approx(avx2.norm2_diff(x.data(), y.data(), n))
                  .epsilon(1e-12));
    }
}

TEST_CASE("kernel selection") {
    kernels::select("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    if (kernels::avx2_available()) {
        kernels::select("avx2");
        CHECK(std::string(kernels::active().name) == "avx2");
    }
    kernels::select("auto");
    CHECK_THROWS_AS(kernels::select("neon"), ConfigError);
}

TEST_CASE("whole pipeline agrees across kernel implementations") {
    if (!kernels::avx2_available()) {
        MESSAGE("avx2 not available; cross-kernel pipeline test skipped");
        return;
    }
    // Same dense computation under both kernel sets; rounding may differ by
    // ulps (FMA), nothing more.
    auto compute = [] {
        Rng rng(77);
        ComplexMatrix a(16, 16), b(16, 16);
        for (auto *m : {&a, &b})
            for (Index i = 0; i < 16; ++i)
                for (Index j = 0; j < 16; ++j)
                    (*m)(i, j) = cplx{2.0 * rng.next_double() - 1.0,
                                      2.0 * rng.next_double() - 1.0};
        return matmul(tensor(a, ComplexMatrix::identity(2)),
                      tensor(b, ComplexMatrix::identity(2)));
    };
    kernels::select("scalar");
    const ComplexMatrix scalar_result = compute();
    kernels::select("avx2");
    const ComplexMatrix avx2_result = compute();
    kernels::select("auto");
    CHECK(max_abs_diff(scalar_result, avx2_result) <= 1e-12);
}

TEST_CASE("axpy against hand-computed complex arithmetic") {
    const auto &ops = kernels::active();
    std::vector<cplx> dst{cplx{1, 1}, cplx{0, 0}, cplx{-2, 3}};
    const std::vector<cplx> x{cplx{2, 0}, cplx{0, 1}, cplx{1, -1}};
    const cplx a{0, 1}; // multiply by i
    ops.axpy(dst.data(), a, x.data(), 3);
    CHECK(close(dst[0], cplx{1, 3}));
    CHECK(close(dst[1], cplx{-1, 0}));
    CHECK(close(dst[2], cplx{-1, 4}));
}
