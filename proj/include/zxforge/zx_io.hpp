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

#include "zxforge/zx_diagram.hpp"

namespace zxforge {
namespace zx {

// Canonical JSON form:
//   { "nodes": [ {"id": 0, "kind": "Z", "phase": "1/2"},
//                {"id": 1, "kind": "in", "pos": 0}, ... ],
//     "edges": [ [0, 1], ... ],
//     "scalar": {"re": 1.0, "im": 0.0} }
// "phase" appears only on Z/X nodes, "pos" only on boundaries. Nodes are
// ordered by id and edges sorted with each pair ascending, so
// import -> export is byte-identical on canonical input.
std::string export_json(const ZxDiagram& d);

// Parses the JSON form; throws ParseError on malformed JSON or fields, and
// MalformedDiagram when the decoded graph violates diagram invariants.
ZxDiagram import_json(const std::string& text);

// Graphviz rendering: Z spiders green, X spiders red, Hadamard nodes as
// yellow boxes, boundaries as plain labels.
std::string export_dot(const ZxDiagram& d);

}  // namespace zx
}  // namespace zxforge
