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

#include <string>

#include "zxforge/gate.hpp"

namespace zxforge {
namespace circ {

// Line-oriented circuit text:
//   qubits <n>
//   <GATE> [<num>/<den>] <targets...>
// '#' starts a comment, blank lines are skipped, gate names are uppercase.
// The angle token is present exactly for RZ/RX. `SD`/`TD` are accepted as
// S-dagger/T-dagger and parse to RZ(-1/2 pi) / RZ(-1/4 pi).
Circuit parse_circuit(const std::string& text);

// Canonical emission; parse(unparse(c)) == c for any valid circuit.
std::string unparse_circuit(const Circuit& c);

}  // namespace circ
}  // namespace zxforge
