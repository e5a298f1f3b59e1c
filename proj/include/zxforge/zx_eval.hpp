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

#include "zxforge/complex_matrix.hpp"
#include "zxforge/zx_diagram.hpp"

namespace zxforge {
namespace zx {

// Contracts the diagram's spider/Hadamard tensors into the 2^m x 2^n matrix
// it denotes (m outputs = rows, n inputs = columns), multiplied by the
// diagram's global scalar. Wire position p corresponds to qubit p, with
// qubit 0 the most significant bit of the row/column index.
//
// Spider tensor semantics, for a degree-d node with legs valued b_1..b_d in
// {0,1}:
//   Z(alpha): 1 at b=0..0, e^{i alpha} at b=1..1, 0 otherwise;
//   X(alpha): 2^{-d/2} (1 + e^{i alpha} (-1)^{b_1+..+b_d})  (same map in the
//             |+>/|-> basis);
//   H:        the Hadamard matrix (symmetric, so orientation-free).
// A degree-0 spider therefore denotes the scalar 1 + e^{i alpha}, and a
// closed diagram evaluates to a 1x1 matrix.
//
// Throws TooLarge when inputs+outputs > MAX_OPEN_LEGS, nodes > MAX_EVAL_NODES
// or an intermediate tensor would exceed MAX_TENSOR_RANK, and
// MalformedDiagram when validate() fails.
ComplexMatrix eval_diagram(const ZxDiagram& d);

// True when the diagram fits under the evaluator's desk-scale caps (the
// rank cap is checked during contraction and may still trigger).
bool evaluable(const ZxDiagram& d);

}  // namespace zx
}  // namespace zxforge
