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

#include "zxforge/zx_diagram.hpp"

#include <algorithm>
#include <cmath>

namespace zxforge {
namespace zx {

std::string kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Z: return "Z";
    case NodeKind::X: return "X";
    case NodeKind::H: return "H";
    case NodeKind::In: return "in";
    case NodeKind::Out: return "out";
  }
  return "?";
}

int ZxDiagram::add_node(NodeKind kind, Phase phase, int pos) {
  ZxNode n;
  n.id = next_id_++;
  n.kind = kind;
  n.phase = phase;
  n.pos = pos;
  nodes_.emplace(n.id, n);
  return n.id;
}

void ZxDiagram::add_node_with_id(const ZxNode& n) {
  if (n.id < 0) throw MalformedDiagram("node id must be non-negative");
  if (nodes_.count(n.id))
    throw MalformedDiagram("duplicate node id " + std::to_string(n.id));
  nodes_.emplace(n.id, n);
  if (n.id >= next_id_) next_id_ = n.id + 1;
}

void ZxDiagram::add_edge(int a, int b) {
  if (!has_node(a) || !has_node(b))
    throw MalformedDiagram("edge endpoint does not exist: (" +
                           std::to_string(a) + "," + std::to_string(b) + ")");
  edges_.insert(Edge(a, b));
}

bool ZxDiagram::remove_edge(int a, int b) {
  auto it = edges_.find(Edge(a, b));
  if (it == edges_.end()) return false;
  edges_.erase(it);
  return true;
}

void ZxDiagram::remove_node(int id) {
  if (!has_node(id))
    throw MalformedDiagram("cannot remove missing node " + std::to_string(id));
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->a == id || it->b == id)
      it = edges_.erase(it);
    else
      ++it;
  }
  nodes_.erase(id);
}

const ZxNode& ZxDiagram::node(int id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end())
    throw MalformedDiagram("no node with id " + std::to_string(id));
  return it->second;
}

ZxNode& ZxDiagram::node_mut(int id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end())
    throw MalformedDiagram("no node with id " + std::to_string(id));
  return it->second;
}

std::vector<int> ZxDiagram::node_ids() const {
  std::vector<int> ids;
  ids.reserve(nodes_.size());
  for (const auto& [id, n] : nodes_) ids.push_back(id);
  return ids;
}

int ZxDiagram::degree(int id) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.a == id) ++d;
    if (e.b == id) ++d;
  }
  return d;
}

std::vector<int> ZxDiagram::neighbours(int id) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.a == id) out.push_back(e.b);
    if (e.b == id) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int ZxDiagram::multiplicity(int a, int b) const {
  return static_cast<int>(edges_.count(Edge(a, b)));
}

std::vector<int> ZxDiagram::inputs() const {
  std::vector<int> ids;
  for (const auto& [id, n] : nodes_)
    if (n.kind == NodeKind::In) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [this](int x, int y) {
    return nodes_.at(x).pos < nodes_.at(y).pos;
  });
  return ids;
}

std::vector<int> ZxDiagram::outputs() const {
  std::vector<int> ids;
  for (const auto& [id, n] : nodes_)
    if (n.kind == NodeKind::Out) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [this](int x, int y) {
    return nodes_.at(x).pos < nodes_.at(y).pos;
  });
  return ids;
}

int ZxDiagram::n_inputs() const {
  int c = 0;
  for (const auto& [id, n] : nodes_)
    if (n.kind == NodeKind::In) ++c;
  return c;
}

int ZxDiagram::n_outputs() const {
  int c = 0;
  for (const auto& [id, n] : nodes_)
    if (n.kind == NodeKind::Out) ++c;
  return c;
}

int ZxDiagram::h_count() const {
  int c = 0;
  for (const auto& [id, n] : nodes_)
    if (n.kind == NodeKind::H) ++c;
  return c;
}

void ZxDiagram::validate() const {
  for (const Edge& e : edges_) {
    if (!has_node(e.a) || !has_node(e.b))
      throw MalformedDiagram("dangling edge (" + std::to_string(e.a) + "," +
                             std::to_string(e.b) + ")");
  }
  if (!std::isfinite(scalar.real()) || !std::isfinite(scalar.imag()))
    throw MalformedDiagram("non-finite global scalar");

  std::set<int> in_pos, out_pos;
  for (const auto& [id, n] : nodes_) {
    if (n.id != id) throw MalformedDiagram("node id field disagrees with key");
    if (n.kind == NodeKind::H) {
      if (!n.phase.is_zero())
        throw MalformedDiagram("Hadamard node " + std::to_string(id) +
                               " carries a phase");
      if (degree(id) != 2)
        throw MalformedDiagram("Hadamard node " + std::to_string(id) +
                               " must have degree 2, has " +
                               std::to_string(degree(id)));
    } else if (is_boundary(n.kind)) {
      if (!n.phase.is_zero())
        throw MalformedDiagram("boundary node " + std::to_string(id) +
                               " carries a phase");
      if (degree(id) != 1)
        throw MalformedDiagram("boundary node " + std::to_string(id) +
                               " must have degree 1, has " +
                               std::to_string(degree(id)));
      if (n.pos < 0)
        throw MalformedDiagram("boundary node " + std::to_string(id) +
                               " has no position");
      auto& seen = (n.kind == NodeKind::In) ? in_pos : out_pos;
      if (!seen.insert(n.pos).second)
        throw MalformedDiagram("duplicate boundary position " +
                               std::to_string(n.pos));
    }
  }
  auto check_gapless = [](const std::set<int>& s, const char* what) {
    int expect = 0;
    for (int p : s) {
      if (p != expect)
        throw MalformedDiagram(std::string(what) +
                               " positions are not gapless 0..n-1");
      ++expect;
    }
  };
  check_gapless(in_pos, "input");
  check_gapless(out_pos, "output");
}

namespace {

struct NodeSig {
  NodeKind kind;
  std::int64_t pnum, pden;
  int pos;  // -1 for internal nodes
  int degree;
  int loops;
  bool operator==(const NodeSig& o) const {
    return kind == o.kind && pnum == o.pnum && pden == o.pden &&
           pos == o.pos && degree == o.degree && loops == o.loops;
  }
  bool operator<(const NodeSig& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (pnum != o.pnum) return pnum < o.pnum;
    if (pden != o.pden) return pden < o.pden;
    if (pos != o.pos) return pos < o.pos;
    if (degree != o.degree) return degree < o.degree;
    return loops < o.loops;
  }
};

NodeSig make_sig(const ZxDiagram& d, int id) {
  const ZxNode& n = d.node(id);
  NodeSig s;
  s.kind = n.kind;
  s.pnum = n.phase.num();
  s.pden = n.phase.den();
  s.pos = is_boundary(n.kind) ? n.pos : -1;
  s.degree = d.degree(id);
  s.loops = d.self_loops(id);
  return s;
}

// Backtracking extension of a partial node mapping a->b. Diagrams at desk
// scale keep this cheap; candidate lists are pre-filtered by signature.
bool extend(const ZxDiagram& da, const ZxDiagram& db,
            const std::vector<int>& a_ids, std::size_t next,
            std::map<int, int>& fwd, std::set<int>& used_b,
            const std::map<int, std::vector<int>>& candidates) {
  if (next == a_ids.size()) return true;
  int u = a_ids[next];
  for (int v : candidates.at(u)) {
    if (used_b.count(v)) continue;
    bool ok = true;
    for (const auto& [u2, v2] : fwd) {
      if (da.multiplicity(u, u2) != db.multiplicity(v, v2)) {
        ok = false;
        break;
      }
    }
    if (ok && da.self_loops(u) != db.self_loops(v)) ok = false;
    if (!ok) continue;
    fwd.emplace(u, v);
    used_b.insert(v);
    if (extend(da, db, a_ids, next + 1, fwd, used_b, candidates)) return true;
    fwd.erase(u);
    used_b.erase(v);
  }
  return false;
}

}  // namespace

bool graph_isomorphic(const ZxDiagram& a, const ZxDiagram& b) {
  if (a.n_nodes() != b.n_nodes() || a.n_edges() != b.n_edges()) return false;

  std::vector<int> a_ids = a.node_ids();
  std::vector<int> b_ids = b.node_ids();

  // Quick reject: the multisets of node signatures must agree.
  std::multiset<NodeSig> sa, sb;
  for (int id : a_ids) sa.insert(make_sig(a, id));
  for (int id : b_ids) sb.insert(make_sig(b, id));
  if (sa != sb) return false;

  std::map<int, std::vector<int>> candidates;
  for (int u : a_ids) {
    NodeSig su = make_sig(a, u);
    std::vector<int>& c = candidates[u];
    for (int v : b_ids)
      if (make_sig(b, v) == su) c.push_back(v);
    if (c.empty()) return false;
  }

  // Match scarce nodes first to prune early.
  std::sort(a_ids.begin(), a_ids.end(), [&](int x, int y) {
    std::size_t cx = candidates[x].size(), cy = candidates[y].size();
    return cx != cy ? cx < cy : x < y;
  });

  std::map<int, int> fwd;
  std::set<int> used_b;
  return extend(a, b, a_ids, 0, fwd, used_b, candidates);
}

}  // namespace zx
}  // namespace zxforge
