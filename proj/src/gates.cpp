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

#include "qcpu/gates.hpp"

#include <cmath>
#include <numbers>

namespace qcpu {

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }

ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

ComplexMatrix hadamard() {
    return scale(1.0 / std::numbers::sqrt2, matadd(pauli_x(), pauli_z()));
}

ComplexMatrix phase_gate(double theta) {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = std::polar(1.0, theta);
    return m;
}

ComplexMatrix fourier_matrix(RegisterShape shape) {
    if (shape.qubits < 1)
        throw DimensionError("fourier_matrix needs at least one qubit");
    const Index n = shape.dim;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix f(n, n);
    for (Index row = 0; row < n; ++row) {
        for (Index col = 0; col < n; ++col) {
            // (row*col) mod N keeps the phase argument small and exact.
            const Index phase_index = (row * col) % n;
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>(phase_index) /
                                 static_cast<double>(n);
            f(row, col) = std::polar(inv_sqrt_n, angle);
        }
    }
    return f;
}

ComplexMatrix fourier_inverse(RegisterShape shape) {
    ComplexMatrix f = fourier_matrix(shape);
    ComplexMatrix out(f.rows(), f.cols());
    for (Index i = 0; i < f.rows(); ++i)
        for (Index j = 0; j < f.cols(); ++j)
            out(i, j) = std::conj(f(i, j));
    return out;
}

ComplexMatrix hadamard_layer(int k) {
    if (k < 1)
        throw DimensionError("hadamard_layer needs at least one qubit");
    ComplexMatrix h = hadamard();
    ComplexMatrix out = h;
    for (int i = 1; i < k; ++i)
        out = tensor(out, h);
    return out;
}

ComplexMatrix single_qubit_on(const ComplexMatrix &gate, int qubit, int k) {
    if (qubit < 1 || qubit > k)
        throw IndexError("qubit index " + std::to_string(qubit) +
                         " outside [1, " + std::to_string(k) + "]");
    ComplexMatrix out = (qubit == 1) ? gate : ComplexMatrix::identity(2);
    for (int slot = 2; slot <= k; ++slot)
        out = tensor(out, slot == qubit ? gate : ComplexMatrix::identity(2));
    return out;
}

} // namespace qcpu
