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

// AVX2+FMA kernels. One __m256d carries two complex doubles as
// [re0, im0, re1, im1]. std::complex<double> is array-compatible with
// double[2], so the arrays are reinterpreted directly.
//
// Complex multiply trick: with ar/ai broadcast per slot,
//   fmaddsub(ar, x, ai * swap(x))
// yields (ar*xr - ai*xi) in even slots and (ar*xi + ai*xr) in odd slots,
// i.e. the interleaved complex product.

#include "qcpu/kernels.hpp"

#ifdef QCPU_HAVE_AVX2

#include <immintrin.h>

namespace qcpu::kernels {
namespace {

// [re0,im0,re1,im1] -> [im0,re0,im1,re1]
inline __m256d swap_halves(__m256d x) { return _mm256_permute_pd(x, 0x5); }

// product of two interleaved complex pairs
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d a_re = _mm256_permute_pd(a, 0x0); // [ar0,ar0,ar1,ar1]
    const __m256d a_im = _mm256_permute_pd(a, 0xF); // [ai0,ai0,ai1,ai1]
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, swap_halves(b)));
}

void axpy_avx2(cplx *dst, cplx a, const cplx *x, std::size_t n) {
    auto *d = reinterpret_cast<double *>(dst);
    const auto *s = reinterpret_cast<const double *>(x);
    const __m256d a_re = _mm256_set1_pd(a.real());
    const __m256d a_im = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(s + 2 * i);
        const __m256d prod =
            _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, swap_halves(xv)));
        const __m256d acc = _mm256_add_pd(_mm256_loadu_pd(d + 2 * i), prod);
        _mm256_storeu_pd(d + 2 * i, acc);
    }
    if (i < n)
        dst[i] += a * x[i];
}

void scale_avx2(cplx *dst, cplx a, const cplx *x, std::size_t n) {
    auto *d = reinterpret_cast<double *>(dst);
    const auto *s = reinterpret_cast<const double *>(x);
    const __m256d a_re = _mm256_set1_pd(a.real());
    const __m256d a_im = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(s + 2 * i);
        const __m256d prod =
            _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, swap_halves(xv)));
        _mm256_storeu_pd(d + 2 * i, prod);
    }
    if (i < n)
        dst[i] = a * x[i];
}

void add_avx2(cplx *dst, const cplx *a, const cplx *b, std::size_t n) {
    auto *d = reinterpret_cast<double *>(dst);
    const auto *pa = reinterpret_cast<const double *>(a);
    const auto *pb = reinterpret_cast<const double *>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d sum = _mm256_add_pd(_mm256_loadu_pd(pa + 2 * i),
                                          _mm256_loadu_pd(pb + 2 * i));
        _mm256_storeu_pd(d + 2 * i, sum);
    }
    if (i < n)
        dst[i] = a[i] + b[i];
}

cplx dot_avx2(const cplx *a, const cplx *b, std::size_t n) {
    const auto *pa = reinterpret_cast<const double *>(a);
    const auto *pb = reinterpret_cast<const double *>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d av = _mm256_loadu_pd(pa + 2 * i);
        const __m256d bv = _mm256_loadu_pd(pb + 2 * i);
        acc = _mm256_add_pd(acc, cmul(av, bv));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    cplx total{lanes[0] + lanes[2], lanes[1] + lanes[3]};
    if (i < n)
        total += a[i] * b[i];
    return total;
}

double norm2_avx2(const cplx *a, std::size_t n) {
    const auto *pa = reinterpret_cast<const double *>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d av = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(av, av, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    if (i < n)
        total += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return total;
}

double norm2_diff_avx2(const cplx *a, const cplx *b, std::size_t n) {
    const auto *pa = reinterpret_cast<const double *>(a);
    const auto *pb = reinterpret_cast<const double *>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(pa + 2 * i),
                                           _mm256_loadu_pd(pb + 2 * i));
        acc = _mm256_fmadd_pd(diff, diff, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    if (i < n) {
        const double dr = a[i].real() - b[i].real();
        const double di = a[i].imag() - b[i].imag();
        total += dr * dr + di * di;
    }
    return total;
}

} // namespace

const Ops &avx2_ops() {
    static const Ops ops{
        "avx2",    axpy_avx2,  scale_avx2,
        add_avx2,  dot_avx2,   norm2_avx2,
        norm2_diff_avx2,
    };
    return ops;
}

} // namespace qcpu::kernels

#else // !QCPU_HAVE_AVX2

namespace qcpu::kernels {

// Placeholder so the symbol exists on targets without an AVX2 build;
// avx2_available() is false there and this is never called.
const Ops &avx2_ops() { return scalar_ops(); }

} // namespace qcpu::kernels

#endif
