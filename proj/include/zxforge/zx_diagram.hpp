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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zxforge/complex_matrix.hpp"
#include "zxforge/errors.hpp"
#include "zxforge/phase.hpp"

namespace zxforge {
namespace zx {

// Desk-scale caps for the reference tensor evaluator.
inline constexpr int MAX_OPEN_LEGS = 10;   // inputs + outputs
inline constexpr int MAX_EVAL_NODES = 64;  // nodes in an evaluable diagram
inline constexpr int MAX_TENSOR_RANK = 12; // widest intermediate tensor

enum class NodeKind { Z, X, H, In, Out };

inline bool is_spider(NodeKind k) {
  return k == NodeKind::Z || k == NodeKind::X;
}
inline bool is_boundary(NodeKind k) {
  return k == NodeKind::In || k == NodeKind::Out;
}
// The opposite spider colour; only meaningful for Z/X.
inline NodeKind other_colour(NodeKind k) {
  return k == NodeKind::Z ? NodeKind::X : NodeKind::Z;
}
std::string kind_name(NodeKind k);

struct ZxNode {
  int id = -1;
  NodeKind kind = NodeKind::Z;
  Phase phase;   // meaningful for Z/X spiders; must stay 0 elsewhere
  int pos = -1;  // boundary wire position; -1 for internal nodes
};

// An unordered edge, stored with endpoints sorted so that multiset lookups
// are orientation-free. Self-loops (a == b) are representable.
struct Edge {
  int a;
  int b;
  Edge(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}
  bool operator<(const Edge& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
  bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
};

// An open multigraph of spiders, Hadamard nodes and boundary points, plus a
// global complex scalar. Only topology matters for the denoted linear map:
// boundary positions fix the row/column ordering, everything else is free.
//
// The diagram is a value type; all mutators keep node ids stable and never
// reuse a deleted id (fresh ids come from an internal counter).
class ZxDiagram {
 public:
  cplx scalar{1.0, 0.0};

  // Adds a node with a fresh id and returns that id.
  int add_node(NodeKind kind, Phase phase = Phase::zero(), int pos = -1);
  // Adds a node with the caller's id (JSON import, step replay). Throws
  // MalformedDiagram on duplicate ids.
  void add_node_with_id(const ZxNode& n);
  // Adds one edge instance; endpoints must exist.
  void add_edge(int a, int b);
  // Removes one instance of the edge; returns false if absent.
  bool remove_edge(int a, int b);
  // Removes the node and every incident edge instance.
  void remove_node(int id);

  bool has_node(int id) const { return nodes_.count(id) != 0; }
  const ZxNode& node(int id) const;
  ZxNode& node_mut(int id);
  std::vector<int> node_ids() const;  // ascending
  std::size_t n_nodes() const { return nodes_.size(); }
  std::size_t n_edges() const { return edges_.size(); }
  const std::multiset<Edge>& edges() const { return edges_; }

  // A self-loop contributes 2 to the degree of its node.
  int degree(int id) const;
  // Neighbour ids with multiplicity, ascending; self-loops contribute the
  // node's own id twice.
  std::vector<int> neighbours(int id) const;
  int multiplicity(int a, int b) const;
  int self_loops(int id) const { return multiplicity(id, id); }

  std::vector<int> inputs() const;   // ids ordered by boundary position
  std::vector<int> outputs() const;  // ids ordered by boundary position
  int n_inputs() const;
  int n_outputs() const;
  int h_count() const;

  // Structural well-formedness: edge endpoints exist, Hadamard nodes have
  // degree exactly 2, boundaries have degree exactly 1 and gapless
  // positions, non-spiders carry phase 0. Throws MalformedDiagram.
  void validate() const;

 private:
  std::map<int, ZxNode> nodes_;
  std::multiset<Edge> edges_;
  int next_id_ = 0;
};

// Structural equality up to renumbering of internal node ids: boundary nodes
// must match by (kind, position), spiders by (colour, phase), and the edge
// multisets must correspond. The global scalar is NOT compared.
bool graph_isomorphic(const ZxDiagram& a, const ZxDiagram& b);

}  // namespace zx
}  // namespace zxforge
