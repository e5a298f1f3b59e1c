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

namespace zxforge {

// Semantic equality of evaluated tensors / unitaries. The CLI may override
// this per invocation (flag --tol or env ZXFORGE_TOL); library callers pass
// an explicit tolerance where it matters and use this default otherwise.
inline constexpr double EQ_TOL = 1e-9;

// Structural invariants checked at construction time (hermiticity, trace,
// normalization, probability sums).
inline constexpr double STRUCT_TOL = 1e-12;

// Eigenvalues of a density operator may dip this far below zero before the
// operator is rejected as non-positive.
inline constexpr double PSD_TOL = -1e-10;

// Purity test: ||rho^2 - rho||_max below this counts as pure.
inline constexpr double PURITY_TOL = 1e-10;

// Eigenvalues / probabilities at or below this are treated as zero support.
inline constexpr double SUPPORT_TOL = 1e-12;

// Desk-scale caps. Tensor evaluation refuses diagrams with more open legs or
// nodes than this; circuit simulation refuses wider circuits.
inline constexpr int MAX_OPEN_LEGS = 10;
inline constexpr int MAX_EVAL_NODES = 64;
inline constexpr int MAX_TENSOR_RANK = 12;
inline constexpr int MAX_QUBITS = 12;

}  // namespace zxforge
