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

// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against.

#include "qcpu/kernels.hpp"

namespace qcpu::kernels {
namespace {

void axpy_scalar(cplx *dst, cplx a, const cplx *x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] += a * x[i];
}

void scale_scalar(cplx *dst, cplx a, const cplx *x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = a * x[i];
}

void add_scalar(cplx *dst, const cplx *a, const cplx *b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = a[i] + b[i];
}

cplx dot_scalar(const cplx *a, const cplx *b, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

double norm2_scalar(const cplx *a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

double norm2_diff_scalar(const cplx *a, const cplx *b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = a[i].real() - b[i].real();
        const double di = a[i].imag() - b[i].imag();
        acc += dr * dr + di * di;
    }
    return acc;
}

} // namespace

const Ops &scalar_ops() {
    static const Ops ops{
        "scalar",    axpy_scalar,  scale_scalar,
        add_scalar,  dot_scalar,   norm2_scalar,
        norm2_diff_scalar,
    };
    return ops;
}

} // namespace qcpu::kernels
