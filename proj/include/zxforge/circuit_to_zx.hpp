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

#include "zxforge/gate.hpp"
#include "zxforge/zx_diagram.hpp"

namespace zxforge {
namespace zx {

// Translates a circuit into a diagram denoting exactly the same unitary
// (no global-phase slack): Z/S/T/RZ become 1-in-1-out Z spiders, X/RX
// X spiders, H a Hadamard node, CNOT the 3-node gadget (Z spider on the
// control wire, X spider on the target wire, one connecting edge) with a
// global factor sqrt(2) per CNOT, and CCNOT is expanded through
// ccnot_decomposition() first. Throws UnsupportedGate for Y, whose
// 1-in-1-out form needs an imaginary global factor not produced here.
ZxDiagram circuit_to_zx(const circ::Circuit& c);

// The standard 15-gate {H, CNOT, T, T-dagger} realization of CCNOT on
// (control, control, target) = (0, 1, 2); phase-exact, not just up to a
// global phase. Shipped as a fixture file as well; the two are compared in
// the tests.
circ::Circuit ccnot_decomposition();

}  // namespace zx
}  // namespace zxforge
