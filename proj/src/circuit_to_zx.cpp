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

#include "zxforge/circuit_to_zx.hpp"

#include <cmath>

namespace zxforge {
namespace zx {

using circ::Gate;
using circ::GateKind;

circ::Circuit ccnot_decomposition() {
  const Phase t(1, 4), td(-1, 4);
  std::vector<Gate> g;
  g.emplace_back(GateKind::H, std::vector<int>{2});
  g.emplace_back(GateKind::CNOT, std::vector<int>{1, 2});
  g.emplace_back(GateKind::RZ, std::vector<int>{2}, td);
  g.emplace_back(GateKind::CNOT, std::vector<int>{0, 2});
  g.emplace_back(GateKind::RZ, std::vector<int>{2}, t);
  g.emplace_back(GateKind::CNOT, std::vector<int>{1, 2});
  g.emplace_back(GateKind::RZ, std::vector<int>{2}, td);
  g.emplace_back(GateKind::CNOT, std::vector<int>{0, 2});
  g.emplace_back(GateKind::RZ, std::vector<int>{1}, t);
  g.emplace_back(GateKind::RZ, std::vector<int>{2}, t);
  g.emplace_back(GateKind::H, std::vector<int>{2});
  g.emplace_back(GateKind::CNOT, std::vector<int>{0, 1});
  g.emplace_back(GateKind::RZ, std::vector<int>{0}, t);
  g.emplace_back(GateKind::RZ, std::vector<int>{1}, td);
  g.emplace_back(GateKind::CNOT, std::vector<int>{0, 1});
  return circ::Circuit(3, std::move(g));
}

namespace {

void append_gate(ZxDiagram& d, std::vector<int>& frontier, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: {
      int n = d.add_node(NodeKind::H);
      d.add_edge(frontier[g.targets[0]], n);
      frontier[g.targets[0]] = n;
      return;
    }
    case GateKind::Z:
    case GateKind::S:
    case GateKind::T:
    case GateKind::RZ: {
      Phase p = g.kind == GateKind::Z   ? Phase::pi()
                : g.kind == GateKind::S ? Phase(1, 2)
                : g.kind == GateKind::T ? Phase(1, 4)
                                        : g.angle;
      int n = d.add_node(NodeKind::Z, p);
      d.add_edge(frontier[g.targets[0]], n);
      frontier[g.targets[0]] = n;
      return;
    }
    case GateKind::X:
    case GateKind::RX: {
      Phase p = g.kind == GateKind::X ? Phase::pi() : g.angle;
      int n = d.add_node(NodeKind::X, p);
      d.add_edge(frontier[g.targets[0]], n);
      frontier[g.targets[0]] = n;
      return;
    }
    case GateKind::CNOT: {
      int zc = d.add_node(NodeKind::Z);
      int xt = d.add_node(NodeKind::X);
      d.add_edge(frontier[g.targets[0]], zc);
      d.add_edge(frontier[g.targets[1]], xt);
      d.add_edge(zc, xt);
      frontier[g.targets[0]] = zc;
      frontier[g.targets[1]] = xt;
      d.scalar *= std::sqrt(2.0);
      return;
    }
    case GateKind::CCNOT: {
      circ::Circuit expansion = ccnot_decomposition();
      for (const Gate& eg : expansion.gates) {
        Gate remapped = eg;
        for (int& t : remapped.targets) t = g.targets[t];
        append_gate(d, frontier, remapped);
      }
      return;
    }
    case GateKind::Y:
      throw UnsupportedGate(
          "Y has no phase-exact 1-in-1-out spider form here; use Z and X");
  }
  throw UnsupportedGate("unhandled gate kind");
}

}  // namespace

ZxDiagram circuit_to_zx(const circ::Circuit& c) {
  ZxDiagram d;
  std::vector<int> frontier(c.n_qubits);
  for (int q = 0; q < c.n_qubits; ++q)
    frontier[q] = d.add_node(NodeKind::In, Phase::zero(), q);
  for (const Gate& g : c.gates) append_gate(d, frontier, g);
  for (int q = 0; q < c.n_qubits; ++q) {
    int out = d.add_node(NodeKind::Out, Phase::zero(), q);
    d.add_edge(frontier[q], out);
  }
  return d;
}

}  // namespace zx
}  // namespace zxforge
