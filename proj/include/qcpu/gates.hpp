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

/// Elementary gates and the discrete Fourier matrix.

#pragma once

#include "qcpu/complex_matrix.hpp"

namespace qcpu {

ComplexMatrix pauli_x();
ComplexMatrix pauli_z();

/// (pauli_x + pauli_z) / sqrt(2)
ComplexMatrix hadamard();

/// diag(1, e^{i*theta})
ComplexMatrix phase_gate(double theta);

/// N x N matrix with entry (m, n) = e^{2*pi*i*m*n/N} / sqrt(N), N = 2^k.
ComplexMatrix fourier_matrix(RegisterShape shape);

/// Entrywise conjugate of fourier_matrix (its inverse).
ComplexMatrix fourier_inverse(RegisterShape shape);

/// k-fold tensor power of the Hadamard gate (uniform-superposition prep).
ComplexMatrix hadamard_layer(int k);

/// gate embedded on qubit `qubit` (1-based, qubit 1 = most significant)
/// of a k-qubit register, identity elsewhere.
ComplexMatrix single_qubit_on(const ComplexMatrix &gate, int qubit, int k);

} // namespace qcpu
