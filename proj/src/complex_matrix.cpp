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

#include "qcpu/complex_matrix.hpp"

#include "qcpu/kernels.hpp"

#include <cmath>
#include <string>

namespace qcpu {
namespace {

void check_dim(Index value, const char *what, Index cap = kMaxDenseDim) {
    if (value <= 0)
        throw DimensionError(std::string(what) + " must be positive, got " +
                             std::to_string(value));
    if (value > cap)
        throw CapError(std::string(what) + " " + std::to_string(value) +
                       " exceeds the dense cap " + std::to_string(cap));
}

} // namespace

// ---- RegisterShape --------------------------------------------------------

RegisterShape RegisterShape::of_qubits(int k) {
    if (k < 0 || k > 12)
        throw DimensionError("qubit count must be in [0, 12], got " +
                             std::to_string(k));
    return RegisterShape{k, Index{1} << k};
}

RegisterShape RegisterShape::from_dim(Index dim) {
    check_dim(dim, "register dimension");
    if ((dim & (dim - 1)) != 0)
        throw DimensionError("register dimension must be a power of two, got " +
                             std::to_string(dim));
    int k = 0;
    while ((Index{1} << k) < dim)
        ++k;
    return RegisterShape{k, dim};
}

// ---- ComplexMatrix --------------------------------------------------------

ComplexMatrix::ComplexMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {
    check_dim(rows, "rows");
    check_dim(cols, "cols");
}

ComplexMatrix::ComplexMatrix(Index rows, Index cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dim(rows, "rows");
    check_dim(cols, "cols");
    if (entries_.size() != static_cast<std::size_t>(rows * cols))
        throw DimensionError("entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows) + "x" +
                             std::to_string(cols));
}

ComplexMatrix ComplexMatrix::identity(Index n) {
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(Index rows, Index cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r > 0 ? static_cast<Index>(rows.begin()->size()) : 0;
    ComplexMatrix m(r, c);
    Index i = 0;
    for (const auto &row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw DimensionError("ragged row in matrix literal");
        Index j = 0;
        for (const cplx &v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx &v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    return true;
}

// ---- StateVector ----------------------------------------------------------

StateVector::StateVector(Index dim)
    : dim_(dim), amps_(static_cast<std::size_t>(dim)) {
    check_dim(dim, "state dimension", kMaxStateDim);
}

StateVector::StateVector(Index dim, std::vector<cplx> amplitudes)
    : dim_(dim), amps_(std::move(amplitudes)) {
    check_dim(dim, "state dimension", kMaxStateDim);
    if (amps_.size() != static_cast<std::size_t>(dim))
        throw DimensionError("amplitude count does not match dimension");
}

StateVector StateVector::basis(Index dim, Index index) {
    if (index < 0 || index >= dim)
        throw IndexError("basis index " + std::to_string(index) +
                         " outside [0, " + std::to_string(dim) + ")");
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

double StateVector::norm_squared() const {
    return kernels::active().norm2(amps_.data(), amps_.size());
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

bool StateVector::is_finite() const {
    for (const cplx &v : amps_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    return true;
}

// ---- operations -----------------------------------------------------------

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    const auto &ops = kernels::active();
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            const cplx factor = a(i, j);
            if (factor == cplx{0.0, 0.0})
                continue;
            for (Index r = 0; r < b.rows(); ++r) {
                cplx *dst = out.row_data(i * b.rows() + r) + j * b.cols();
                ops.scale(dst, factor, b.row_data(r),
                          static_cast<std::size_t>(b.cols()));
            }
        }
    }
    return out;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    StateVector out(a.dim() * b.dim());
    const auto &ops = kernels::active();
    for (Index i = 0; i < a.dim(); ++i) {
        if (a[i] == cplx{0.0, 0.0})
            continue;
        ops.scale(&out[i * b.dim()], a[i], &b[0],
                  static_cast<std::size_t>(b.dim()));
    }
    return out;
}

ComplexMatrix outer(Index m, Index n, Index dim) {
    if (m < 0 || m >= dim || n < 0 || n >= dim)
        throw IndexError("outer(" + std::to_string(m) + ", " + std::to_string(n) +
                         ") outside dimension " + std::to_string(dim));
    ComplexMatrix out(dim, dim);
    out(m, n) = 1.0;
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul dimension mismatch: " +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()));
    ComplexMatrix out(a.rows(), b.cols());
    const auto &ops = kernels::active();
    const auto n = static_cast<std::size_t>(b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        cplx *dst = out.row_data(i);
        for (Index k = 0; k < a.cols(); ++k) {
            const cplx factor = a(i, k);
            if (factor == cplx{0.0, 0.0})
                continue;
            ops.axpy(dst, factor, b.row_data(k), n);
        }
    }
    return out;
}

ComplexMatrix matadd(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matadd dimension mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    kernels::active().add(out.row_data(0), a.row_data(0), b.row_data(0),
                          a.entries().size());
    return out;
}

ComplexMatrix matsub(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matadd(a, scale(-1.0, b));
}

ComplexMatrix scale(cplx factor, const ComplexMatrix &a) {
    ComplexMatrix out(a.rows(), a.cols());
    kernels::active().scale(out.row_data(0), factor, a.row_data(0),
                            a.entries().size());
    return out;
}

StateVector scale(cplx factor, const StateVector &v) {
    StateVector out(v.dim());
    kernels::active().scale(&out[0], factor, &v[0],
                            static_cast<std::size_t>(v.dim()));
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out(j, i) = std::conj(a(i, j));
    return out;
}

StateVector apply(const ComplexMatrix &m, const StateVector &v) {
    if (m.cols() != v.dim())
        throw DimensionError("apply dimension mismatch: " +
                             std::to_string(m.cols()) + " vs " +
                             std::to_string(v.dim()));
    StateVector out(m.rows());
    const auto &ops = kernels::active();
    const auto n = static_cast<std::size_t>(m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        out[i] = ops.dot(m.row_data(i), &v[0], n);
    return out;
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("frobenius_distance dimension mismatch");
    return std::sqrt(kernels::active().norm2_diff(a.row_data(0), b.row_data(0),
                                                  a.entries().size()));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim())
        throw DimensionError("max_abs_diff dimension mismatch");
    double worst = 0.0;
    for (Index i = 0; i < a.dim(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           max_abs_diff(a, b) <= tol;
}

bool approx_equal(const StateVector &a, const StateVector &b, double tol) {
    return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

double deviation_from_identity(const ComplexMatrix &m) {
    double worst = 0.0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            worst = std::max(worst, std::abs(m(i, j) - want));
        }
    return worst;
}

double unitarity_residual(const ComplexMatrix &m) {
    return deviation_from_identity(matmul(dagger(m), m));
}

} // namespace qcpu
