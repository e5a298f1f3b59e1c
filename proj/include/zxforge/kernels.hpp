// Copyright 2026 The zxforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "zxforge/complex_matrix.hpp"

// The dense kernels exist twice: zxforge::ref holds the plain serial
// reference implementations and zxforge::par the OpenMP ones. Both flavours
// use the same per-element summation order, so their outputs are
// bit-identical and the tests can compare them exactly. bench_kernels times
// one against the other.

namespace zxforge {
namespace ref {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Left-multiplies m (2^n_qubits square) by the gate u (2^k square) embedded
// at the given qubit positions; qubit 0 is the most significant bit.
ComplexMatrix apply_gate(const ComplexMatrix& u, int n_qubits,
                         const std::vector<int>& targets,
                         const ComplexMatrix& m);

// Same embedding applied to a state vector of length 2^n_qubits.
std::vector<cplx> apply_gate_state(const ComplexMatrix& u, int n_qubits,
                                   const std::vector<int>& targets,
                                   const std::vector<cplx>& state);

}  // namespace ref

namespace par {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix apply_gate(const ComplexMatrix& u, int n_qubits,
                         const std::vector<int>& targets,
                         const ComplexMatrix& m);

}  // namespace par
}  // namespace zxforge
