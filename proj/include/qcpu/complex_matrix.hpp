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
 * Dense complex matrices, state vectors and register shapes.
 *
 * Conventions used across the project:
 *  - row-major storage, zero-based indexing;
 *  - basis index of a k-qubit register is binary with qubit 1 as the most
 *    significant bit;
 *  - values are immutable once built, every operation returns a new value;
 *  - dimensions are capped at 2^12 so no dense operator outgrows memory.
 */

#pragma once

#include "qcpu/errors.hpp"

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qcpu {

using cplx = std::complex<double>;
using Index = std::int64_t;

/// Largest dimension any dense matrix may have (2^12).
inline constexpr Index kMaxDenseDim = 4096;

/// State vectors are cheap; they may outgrow the operator cap (2^16).
inline constexpr Index kMaxStateDim = 65536;

/// Default absolute elementwise tolerance for complex comparisons.
inline constexpr double kDefaultTolerance = 1e-12;

/// A k-qubit register: dim == 2^k exactly.
struct RegisterShape {
    int qubits = 0;
    Index dim = 1;

    static RegisterShape of_qubits(int k);
    /// Infers k from a power-of-two dimension; throws DimensionError else.
    static RegisterShape from_dim(Index dim);
};

/// Dense row-major complex matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(Index rows, Index cols); // zero-filled
    ComplexMatrix(Index rows, Index cols, std::vector<cplx> entries);

    static ComplexMatrix identity(Index n);
    static ComplexMatrix zero(Index rows, Index cols);
    /// Row-by-row literal, e.g. {{1,0},{0,-1}}.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const cplx &operator()(Index r, Index c) const { return entries_[r * cols_ + c]; }
    cplx &operator()(Index r, Index c) { return entries_[r * cols_ + c]; }

    const cplx *row_data(Index r) const { return entries_.data() + r * cols_; }
    cplx *row_data(Index r) { return entries_.data() + r * cols_; }
    const std::vector<cplx> &entries() const { return entries_; }

    bool is_finite() const;

  private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<cplx> entries_;
};

/// Dense complex state vector.
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(Index dim); // zero-filled
    StateVector(Index dim, std::vector<cplx> amplitudes);

    /// |index> in a dim-dimensional space.
    static StateVector basis(Index dim, Index index);

    Index dim() const { return dim_; }
    const cplx &operator[](Index i) const { return amps_[i]; }
    cplx &operator[](Index i) { return amps_[i]; }
    const std::vector<cplx> &amplitudes() const { return amps_; }

    double norm() const;
    double norm_squared() const;
    bool is_normalized(double tol = kDefaultTolerance) const;
    bool is_finite() const;

  private:
    Index dim_ = 0;
    std::vector<cplx> amps_;
};

// ---- operations ----------------------------------------------------------

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product of states: index = i_a * b.dim + i_b.
StateVector tensor(const StateVector &a, const StateVector &b);

/// |m><n| in a dim-dimensional space.
ComplexMatrix outer(Index m, Index n, Index dim);

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix matadd(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix matsub(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(cplx factor, const ComplexMatrix &a);
StateVector scale(cplx factor, const StateVector &v);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// m * v; m may be rectangular.
StateVector apply(const ComplexMatrix &m, const StateVector &v);

/// sqrt(sum |a_ij - b_ij|^2); dimensions must agree.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const StateVector &a, const StateVector &b);

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                  double tol = kDefaultTolerance);
bool approx_equal(const StateVector &a, const StateVector &b,
                  double tol = kDefaultTolerance);

/// max_ij |m(i,j) - delta_ij|, a cheap distance from the identity.
double deviation_from_identity(const ComplexMatrix &m);

/// max-entry norm of (dagger(m) * m - I).
double unitarity_residual(const ComplexMatrix &m);

} // namespace qcpu
