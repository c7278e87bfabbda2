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
 * Low-level complex-double array kernels behind all dense linear algebra.
 *
 * Every kernel exists in a scalar reference form and, on x86-64, an AVX2+FMA
 * form. The active set is chosen once at startup: AVX2 when the CPU supports
 * it, scalar otherwise. The QCPU_KERNELS environment variable ("scalar",
 * "avx2", "auto") or select() overrides the choice; tests use this to check
 * the two implementations agree on random data.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace qcpu::kernels {

using cplx = std::complex<double>;

/// Function-pointer table for one kernel implementation.
struct Ops {
    const char *name;

    /// dst[i] += a * x[i]
    void (*axpy)(cplx *dst, cplx a, const cplx *x, std::size_t n);
    /// dst[i] = a * x[i]
    void (*scale)(cplx *dst, cplx a, const cplx *x, std::size_t n);
    /// dst[i] = a[i] + b[i]
    void (*add)(cplx *dst, const cplx *a, const cplx *b, std::size_t n);
    /// sum_i a[i] * b[i]  (no conjugation; matvec row kernel)
    cplx (*dot)(const cplx *a, const cplx *b, std::size_t n);
    /// sum_i |a[i]|^2
    double (*norm2)(const cplx *a, std::size_t n);
    /// sum_i |a[i] - b[i]|^2
    double (*norm2_diff)(const cplx *a, const cplx *b, std::size_t n);
};

/// Scalar reference implementation. Always available.
const Ops &scalar_ops();

/// True when the AVX2 implementation is compiled in and the CPU supports it.
bool avx2_available();

/// AVX2 implementation; only valid to call when avx2_available().
const Ops &avx2_ops();

/// The active implementation (env QCPU_KERNELS consulted on first use).
const Ops &active();

/// Force a specific implementation: "auto", "scalar" or "avx2".
/// Throws ConfigError for unknown names or unavailable implementations.
void select(std::string_view which);

} // namespace qcpu::kernels
