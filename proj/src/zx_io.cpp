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

#include "zxforge/zx_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "zxforge/errors.hpp"

namespace zxforge {
namespace zx {

using ordered_json = nlohmann::ordered_json;

std::string export_json(const ZxDiagram& d) {
  ordered_json doc;
  doc["nodes"] = ordered_json::array();
  for (int id : d.node_ids()) {
    const ZxNode& n = d.node(id);
    ordered_json jn;
    jn["id"] = n.id;
    jn["kind"] = kind_name(n.kind);
    if (is_spider(n.kind)) jn["phase"] = n.phase.str();
    if (is_boundary(n.kind)) jn["pos"] = n.pos;
    doc["nodes"].push_back(std::move(jn));
  }
  doc["edges"] = ordered_json::array();
  for (const Edge& e : d.edges())  // multiset order: sorted pairs
    doc["edges"].push_back(ordered_json::array({e.a, e.b}));
  doc["scalar"] = {{"re", d.scalar.real()}, {"im", d.scalar.imag()}};
  return doc.dump(2) + "\n";
}

ZxDiagram import_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid diagram JSON: ") + e.what());
  }

  ZxDiagram d;
  try {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
      throw ParseError("diagram JSON must contain 'nodes' and 'edges'");
    for (const auto& jn : doc.at("nodes")) {
      ZxNode n;
      n.id = jn.at("id").get<int>();
      const std::string kind = jn.at("kind").get<std::string>();
      if (kind == "Z")
        n.kind = NodeKind::Z;
      else if (kind == "X")
        n.kind = NodeKind::X;
      else if (kind == "H")
        n.kind = NodeKind::H;
      else if (kind == "in")
        n.kind = NodeKind::In;
      else if (kind == "out")
        n.kind = NodeKind::Out;
      else
        throw ParseError("unknown node kind '" + kind + "'");
      if (jn.contains("phase")) {
        if (!is_spider(n.kind))
          throw ParseError("'phase' is only valid on Z/X nodes");
        n.phase = Phase::parse(jn.at("phase").get<std::string>());
      }
      if (jn.contains("pos")) {
        if (!is_boundary(n.kind))
          throw ParseError("'pos' is only valid on boundary nodes");
        n.pos = jn.at("pos").get<int>();
      } else if (is_boundary(n.kind)) {
        throw ParseError("boundary node missing 'pos'");
      }
      d.add_node_with_id(n);
    }
    for (const auto& je : doc.at("edges")) {
      if (!je.is_array() || je.size() != 2)
        throw ParseError("each edge must be a pair [a, b]");
      d.add_edge(je.at(0).get<int>(), je.at(1).get<int>());
    }
    if (doc.contains("scalar")) {
      d.scalar = cplx{doc.at("scalar").at("re").get<double>(),
                      doc.at("scalar").at("im").get<double>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid diagram JSON: ") + e.what());
  }
  d.validate();
  return d;
}

std::string export_dot(const ZxDiagram& d) {
  std::ostringstream out;
  out << "digraph zx {\n";
  out << "  rankdir=LR;\n";
  out << "  edge [dir=none];\n";
  for (int id : d.node_ids()) {
    const ZxNode& n = d.node(id);
    out << "  n" << id << " [";
    switch (n.kind) {
      case NodeKind::Z:
        out << "label=\"Z(" << n.phase.str()
            << ")\" shape=circle style=filled fillcolor=green";
        break;
      case NodeKind::X:
        out << "label=\"X(" << n.phase.str()
            << ")\" shape=circle style=filled fillcolor=red";
        break;
      case NodeKind::H:
        out << "label=\"H\" shape=box style=filled fillcolor=yellow";
        break;
      case NodeKind::In:
        out << "label=\"in" << n.pos << "\" shape=plaintext";
        break;
      case NodeKind::Out:
        out << "label=\"out" << n.pos << "\" shape=plaintext";
        break;
    }
    out << "];\n";
  }
  for (const Edge& e : d.edges())
    out << "  n" << e.a << " -> n" << e.b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zx
}  // namespace zxforge
