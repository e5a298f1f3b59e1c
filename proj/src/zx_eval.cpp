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

#include "zxforge/zx_eval.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace zxforge {
namespace zx {

namespace {

constexpr double INV_SQRT2 = 0.7071067811865475244008443621048490;

// A dense tensor over a handful of 2-valued legs. Leg k of `legs` maps to
// bit k of the flat index (bit 0 = least significant), so
// data[sum_k b_k 2^k] is the entry at leg values (b_0, .., b_{rank-1}).
struct SmallTensor {
  std::vector<int> legs;   // globally unique leg keys, no duplicates
  std::vector<cplx> data;  // size 2^legs.size()

  int rank() const { return static_cast<int>(legs.size()); }
};

// Sums out every leg key that occurs twice in `legs` (self-loops produce
// such tensors at construction). Repeated keys are paired left-to-right.
SmallTensor self_trace(SmallTensor t) {
  for (;;) {
    int first = -1, second = -1;
    for (int i = 0; i < t.rank() && second < 0; ++i)
      for (int j = i + 1; j < t.rank(); ++j)
        if (t.legs[i] == t.legs[j]) {
          first = i;
          second = j;
          break;
        }
    if (second < 0) return t;

    SmallTensor r;
    for (int k = 0; k < t.rank(); ++k)
      if (k != first && k != second) r.legs.push_back(t.legs[k]);
    r.data.assign(std::size_t{1} << r.legs.size(), cplx{0.0, 0.0});
    for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
      if (((idx >> first) & 1u) != ((idx >> second) & 1u)) continue;
      std::size_t out = 0;
      int bit = 0;
      for (int k = 0; k < t.rank(); ++k) {
        if (k == first || k == second) continue;
        out |= ((idx >> k) & 1u) << bit;
        ++bit;
      }
      r.data[out] += t.data[idx];
    }
    t = std::move(r);
  }
}

SmallTensor spider_tensor(NodeKind colour, const Phase& phase,
                          std::vector<int> legs) {
  SmallTensor t;
  t.legs = std::move(legs);
  const int d = t.rank();
  const cplx w = std::polar(1.0, phase.radians());
  t.data.assign(std::size_t{1} << d, cplx{0.0, 0.0});
  if (colour == NodeKind::Z) {
    t.data.front() += cplx{1.0, 0.0};
    t.data.back() += w;  // front == back when d == 0: scalar 1 + e^{i a}
  } else {
    const double norm = std::pow(INV_SQRT2, d);
    for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
      const int parity = std::popcount(idx) & 1;
      t.data[idx] = norm * (cplx{1.0, 0.0} + (parity ? -w : w));
    }
  }
  return self_trace(std::move(t));
}

SmallTensor hadamard_tensor(int leg_a, int leg_b) {
  SmallTensor t;
  t.legs = {leg_a, leg_b};
  t.data = {INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2};
  return self_trace(std::move(t));
}

SmallTensor identity_tensor(int leg_a, int leg_b) {
  SmallTensor t;
  t.legs = {leg_a, leg_b};
  t.data = {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  return self_trace(std::move(t));
}

// Contracts all leg keys shared between a and b; the result keeps a's free
// legs first, then b's. Throws TooLarge past the rank cap.
SmallTensor contract(const SmallTensor& a, const SmallTensor& b) {
  std::vector<int> shared;
  for (int k : a.legs)
    if (std::find(b.legs.begin(), b.legs.end(), k) != b.legs.end())
      shared.push_back(k);

  SmallTensor r;
  std::vector<int> a_free, b_free;  // positions of free legs in a / b
  std::vector<int> a_shared, b_shared;
  for (int i = 0; i < a.rank(); ++i) {
    if (std::find(shared.begin(), shared.end(), a.legs[i]) != shared.end())
      a_shared.push_back(i);
    else {
      a_free.push_back(i);
      r.legs.push_back(a.legs[i]);
    }
  }
  for (int i = 0; i < b.rank(); ++i) {
    if (std::find(shared.begin(), shared.end(), b.legs[i]) != shared.end())
      b_shared.push_back(i);
    else {
      b_free.push_back(i);
      r.legs.push_back(b.legs[i]);
    }
  }
  // Align b's shared-leg positions with a's shared order.
  std::vector<int> b_shared_aligned(a_shared.size());
  for (std::size_t s = 0; s < a_shared.size(); ++s) {
    int key = a.legs[a_shared[s]];
    for (int i = 0; i < b.rank(); ++i)
      if (b.legs[i] == key) b_shared_aligned[s] = i;
  }

  if (r.rank() > MAX_TENSOR_RANK)
    throw TooLarge("intermediate tensor of rank " + std::to_string(r.rank()) +
                   " exceeds the contraction cap " +
                   std::to_string(MAX_TENSOR_RANK));

  r.data.assign(std::size_t{1} << r.legs.size(), cplx{0.0, 0.0});
  const std::size_t n_free_a = a_free.size();
  const std::size_t n_free_b = b_free.size();
  const std::size_t n_shared = a_shared.size();
  for (std::size_t out = 0; out < r.data.size(); ++out) {
    cplx acc{0.0, 0.0};
    for (std::size_t s = 0; s < (std::size_t{1} << n_shared); ++s) {
      std::size_t ia = 0, ib = 0;
      for (std::size_t k = 0; k < n_free_a; ++k)
        ia |= ((out >> k) & 1u) << a_free[k];
      for (std::size_t k = 0; k < n_free_b; ++k)
        ib |= ((out >> (n_free_a + k)) & 1u) << b_free[k];
      for (std::size_t k = 0; k < n_shared; ++k) {
        ia |= ((s >> k) & 1u) << a_shared[k];
        ib |= ((s >> k) & 1u) << b_shared_aligned[k];
      }
      acc += a.data[ia] * b.data[ib];
    }
    r.data[out] = acc;
  }
  return r;
}

}  // namespace

bool evaluable(const ZxDiagram& d) {
  return d.n_inputs() + d.n_outputs() <= MAX_OPEN_LEGS &&
         static_cast<int>(d.n_nodes()) <= MAX_EVAL_NODES;
}

ComplexMatrix eval_diagram(const ZxDiagram& d) {
  d.validate();
  const int n_in = d.n_inputs();
  const int n_out = d.n_outputs();
  if (n_in + n_out > MAX_OPEN_LEGS)
    throw TooLarge("diagram has " + std::to_string(n_in + n_out) +
                   " open legs; the evaluator cap is " +
                   std::to_string(MAX_OPEN_LEGS));
  if (static_cast<int>(d.n_nodes()) > MAX_EVAL_NODES)
    throw TooLarge("diagram has " + std::to_string(d.n_nodes()) +
                   " nodes; the evaluator cap is " +
                   std::to_string(MAX_EVAL_NODES));

  // Hand out one leg key per edge end attached to an internal node, and
  // remember which key each boundary node owns. Edges between two
  // boundaries get an explicit identity tensor.
  std::map<int, std::vector<int>> node_legs;  // internal node id -> keys
  std::map<int, int> boundary_leg;            // boundary node id -> key
  std::vector<SmallTensor> tensors;
  int next_key = 0;

  for (const Edge& e : d.edges()) {
    const bool a_bnd = is_boundary(d.node(e.a).kind);
    const bool b_bnd = is_boundary(d.node(e.b).kind);
    if (a_bnd && b_bnd) {
      int ka = next_key++;
      int kb = next_key++;
      boundary_leg[e.a] = ka;
      boundary_leg[e.b] = kb;
      tensors.push_back(identity_tensor(ka, kb));
    } else {
      int k = next_key++;
      if (a_bnd)
        boundary_leg[e.a] = k;
      else
        node_legs[e.a].push_back(k);
      if (b_bnd)
        boundary_leg[e.b] = k;
      else
        node_legs[e.b].push_back(k);
    }
  }

  for (int id : d.node_ids()) {
    const ZxNode& n = d.node(id);
    if (is_boundary(n.kind)) continue;
    std::vector<int>& legs = node_legs[id];  // may be empty (isolated spider)
    if (n.kind == NodeKind::H) {
      tensors.push_back(hadamard_tensor(legs.at(0), legs.at(1)));
    } else {
      tensors.push_back(spider_tensor(n.kind, n.phase, legs));
    }
  }

  // Group tensors into connected components via shared leg keys.
  const int nt = static_cast<int>(tensors.size());
  std::vector<int> comp(nt, -1);
  std::map<int, std::vector<int>> key_holders;
  for (int i = 0; i < nt; ++i)
    for (int k : tensors[i].legs) key_holders[k].push_back(i);
  int n_comp = 0;
  for (int i = 0; i < nt; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = n_comp;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int k : tensors[t].legs)
        for (int j : key_holders[k])
          if (comp[j] < 0) {
            comp[j] = n_comp;
            stack.push_back(j);
          }
    }
    ++n_comp;
  }

  // Contract each component greedily, always absorbing the neighbour that
  // minimizes the resulting rank; ties fall to the lower tensor index so
  // evaluation order is deterministic.
  cplx closed_factor{1.0, 0.0};
  std::vector<SmallTensor> open_parts;
  for (int c = 0; c < n_comp; ++c) {
    std::vector<int> members;
    for (int i = 0; i < nt; ++i)
      if (comp[i] == c) members.push_back(i);
    SmallTensor acc = tensors[members.front()];
    std::vector<int> rest(members.begin() + 1, members.end());
    while (!rest.empty()) {
      int best = -1, best_rank = INT32_MAX;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        const SmallTensor& t = tensors[rest[j]];
        int shared = 0;
        for (int k : t.legs)
          if (std::find(acc.legs.begin(), acc.legs.end(), k) !=
              acc.legs.end())
            ++shared;
        if (shared == 0) continue;
        int rank_after = acc.rank() + t.rank() - 2 * shared;
        if (rank_after < best_rank) {
          best_rank = rank_after;
          best = static_cast<int>(j);
        }
      }
      // Connectivity of the component guarantees a sharing neighbour.
      acc = contract(acc, tensors[rest[best]]);
      rest.erase(rest.begin() + best);
    }
    if (acc.rank() == 0)
      closed_factor *= acc.data.front();
    else
      open_parts.push_back(std::move(acc));
  }

  // Assemble the final matrix: row bits from output positions, column bits
  // from input positions, wire position 0 the most significant bit.
  std::vector<int> in_ids = d.inputs();
  std::vector<int> out_ids = d.outputs();
  std::map<int, std::pair<int, int>> key_slot;  // leg key -> (part, leg pos)
  for (std::size_t p = 0; p < open_parts.size(); ++p)
    for (int i = 0; i < open_parts[p].rank(); ++i)
      key_slot[open_parts[p].legs[i]] = {static_cast<int>(p), i};

  const std::size_t rows = std::size_t{1} << n_out;
  const std::size_t cols = std::size_t{1} << n_in;
  ComplexMatrix result(rows, cols);
  std::vector<std::size_t> part_idx(open_parts.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t col = 0; col < cols; ++col) {
      std::fill(part_idx.begin(), part_idx.end(), 0);
      for (int q = 0; q < n_in; ++q) {
        const std::size_t bit = (col >> (n_in - 1 - q)) & 1u;
        auto [p, pos] = key_slot.at(boundary_leg.at(in_ids[q]));
        part_idx[p] |= bit << pos;
      }
      for (int q = 0; q < n_out; ++q) {
        const std::size_t bit = (r >> (n_out - 1 - q)) & 1u;
        auto [p, pos] = key_slot.at(boundary_leg.at(out_ids[q]));
        part_idx[p] |= bit << pos;
      }
      cplx v = closed_factor;
      for (std::size_t p = 0; p < open_parts.size(); ++p)
        v *= open_parts[p].data[part_idx[p]];
      result(r, col) = v * d.scalar;
    }
  }
  return result;
}

}  // namespace zx
}  // namespace zxforge
