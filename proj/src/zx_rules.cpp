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

#include "zxforge/zx_rules.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include <nlohmann/json.hpp>

#include "zxforge/tolerances.hpp"
#include "zxforge/zx_eval.hpp"

namespace zxforge {
namespace zx {

namespace {

constexpr double SQRT2 = 1.4142135623730950488016887242097;

bool spider_at(const ZxDiagram& d, int id) {
  return d.has_node(id) && is_spider(d.node(id).kind);
}

// Distinct edges of the multiset, each reported once.
std::vector<Edge> distinct_edges(const ZxDiagram& d) {
  std::vector<Edge> out;
  for (auto it = d.edges().begin(); it != d.edges().end();
       it = d.edges().upper_bound(*it))
    out.push_back(*it);
  return out;
}

// Edge instances incident to `id`, as (id, other) with loops reported once.
std::vector<Edge> incident_edges(const ZxDiagram& d, int id) {
  std::vector<Edge> out;
  for (const Edge& e : d.edges())
    if (e.a == id || e.b == id) out.push_back(e);
  return out;
}

// Connected components over nodes (not only tensors); singleton nodes form
// their own component. Each component is sorted; components are ordered by
// their smallest member.
std::vector<std::vector<int>> components(const ZxDiagram& d) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : d.node_ids()) {
    if (seen.count(start)) continue;
    std::vector<int> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : d.neighbours(u))
        if (!seen.count(v)) {
          seen.insert(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

ZxDiagram subdiagram(const ZxDiagram& d, const std::vector<int>& nodes) {
  ZxDiagram sub;
  std::set<int> keep(nodes.begin(), nodes.end());
  for (int id : nodes) sub.add_node_with_id(d.node(id));
  for (const Edge& e : d.edges())
    if (keep.count(e.a) && keep.count(e.b)) sub.add_edge(e.a, e.b);
  return sub;  // scalar left at 1: the component's own value is wanted
}

// ---------------------------------------------------------------- matchers
// Each checker assumes nothing about the site beyond its length and reports
// whether the rule applies there.

bool match_spider_fuse(const ZxDiagram& d, const Site& s) {
  if (s.nodes.size() == 1) {
    int u = s.nodes[0];
    return spider_at(d, u) && d.self_loops(u) >= 1;
  }
  if (s.nodes.size() != 2) return false;
  int u = s.nodes[0], v = s.nodes[1];
  if (u == v || !spider_at(d, u) || !spider_at(d, v)) return false;
  if (d.node(u).kind != d.node(v).kind) return false;
  return d.multiplicity(u, v) >= 1;
}

bool match_identity_remove(const ZxDiagram& d, const Site& s) {
  if (s.nodes.size() != 1) return false;
  int u = s.nodes[0];
  return spider_at(d, u) && d.node(u).phase.is_zero() && d.degree(u) == 2 &&
         d.self_loops(u) == 0;
}

bool match_colour_change_spider(const ZxDiagram& d, int u) {
  if (!spider_at(d, u) || d.self_loops(u) != 0) return false;
  std::vector<int> nb = d.neighbours(u);
  if (nb.empty()) return false;
  std::set<int> hset(nb.begin(), nb.end());
  if (hset.size() != nb.size()) return false;  // parallel edges to one H
  for (int h : nb) {
    if (d.node(h).kind != NodeKind::H) return false;
    if (d.degree(h) != 2) return false;
    std::vector<int> hn = d.neighbours(h);  // {u, far}
    int far = hn[0] == u ? hn[1] : hn[0];
    if (far == u || hset.count(far)) return false;
  }
  return true;
}

bool match_hh_cancel(const ZxDiagram& d, int x, int y) {
  if (x == y || !d.has_node(x) || !d.has_node(y)) return false;
  if (d.node(x).kind != NodeKind::H || d.node(y).kind != NodeKind::H)
    return false;
  return d.degree(x) == 2 && d.degree(y) == 2 && d.multiplicity(x, y) == 1;
}

bool match_colour_change(const ZxDiagram& d, const Site& s) {
  if (s.nodes.size() == 1) return match_colour_change_spider(d, s.nodes[0]);
  if (s.nodes.size() == 2) return match_hh_cancel(d, s.nodes[0], s.nodes[1]);
  return false;
}

bool match_pi_commute(const ZxDiagram& d, const Site& s) {
  if (s.nodes.size() != 2) return false;
  int p = s.nodes[0], z = s.nodes[1];
  if (!spider_at(d, p) || !spider_at(d, z) || p == z) return false;
  if (!d.node(p).phase.is_pi() || d.degree(p) != 2 || d.self_loops(p) != 0)
    return false;
  if (d.node(z).kind != other_colour(d.node(p).kind)) return false;
  if (d.self_loops(z) != 0) return false;
  std::vector<int> nb = d.neighbours(p);  // two entries
  if (nb[0] == nb[1]) return false;       // both edges to z: not a wire
  return nb[0] == z || nb[1] == z;
}

bool match_state_copy(const ZxDiagram& d, const Site& s, bool want_pi) {
  if (s.nodes.size() != 2) return false;
  int p = s.nodes[0], z = s.nodes[1];
  if (!spider_at(d, p) || !spider_at(d, z) || p == z) return false;
  const Phase& ph = d.node(p).phase;
  if (want_pi ? !ph.is_pi() : !ph.is_zero()) return false;
  if (d.degree(p) != 1) return false;
  if (d.node(z).kind != other_colour(d.node(p).kind)) return false;
  if (d.self_loops(z) != 0) return false;
  return d.multiplicity(p, z) == 1;
}

bool match_bialgebra(const ZxDiagram& d, const Site& s) {
  if (s.nodes.size() != 4) return false;
  std::set<int> uniq(s.nodes.begin(), s.nodes.end());
  if (uniq.size() != 4) return false;
  std::vector<int> zs, xs;
  for (int id : s.nodes) {
    if (!spider_at(d, id)) return false;
    const ZxNode& n = d.node(id);
    if (!n.phase.is_zero()) return false;
    if (d.degree(id) != 3 || d.self_loops(id) != 0) return false;
    (n.kind == NodeKind::Z ? zs : xs).push_back(id);
  }
  if (zs.size() != 2 || xs.size() != 2) return false;
  for (int z : zs)
    for (int x : xs)
      if (d.multiplicity(z, x) != 1) return false;
  if (d.multiplicity(zs[0], zs[1]) != 0) return false;
  if (d.multiplicity(xs[0], xs[1]) != 0) return false;
  return true;
}

bool match_hopf_cancel(const ZxDiagram& d, const Site& s) {
  if (s.nodes.size() != 2) return false;
  int u = s.nodes[0], v = s.nodes[1];
  if (!spider_at(d, u) || !spider_at(d, v) || u == v) return false;
  if (d.node(u).kind == d.node(v).kind) return false;
  return d.multiplicity(u, v) >= 2;
}

bool match_scalar_d(const ZxDiagram& d, const Site& s) {
  if (s.nodes.empty()) return false;
  std::set<int> want(s.nodes.begin(), s.nodes.end());
  if (want.size() != s.nodes.size()) return false;
  for (int id : s.nodes) {
    if (!d.has_node(id)) return false;
    if (is_boundary(d.node(id).kind)) return false;
  }
  // Must be exactly one whole connected component.
  for (const std::vector<int>& comp : components(d)) {
    if (!want.count(comp.front())) continue;
    if (std::set<int>(comp.begin(), comp.end()) != want) return false;
    if (static_cast<int>(comp.size()) > MAX_EVAL_NODES) return false;
    try {
      eval_diagram(subdiagram(d, comp));
    } catch (const Error&) {
      return false;  // over the contraction caps: leave it alone
    }
    return true;
  }
  return false;
}

// --------------------------------------------------------------- surgeries
// Each returns the scalar_delta and fills consumed/produced. The diagram is
// the working copy owned by apply_rule.

cplx apply_spider_fuse(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                       std::vector<int>& prod) {
  if (s.nodes.size() == 1) {
    d.remove_edge(s.nodes[0], s.nodes[0]);
    return {1.0, 0.0};
  }
  int u = s.nodes[0], v = s.nodes[1];
  d.node_mut(u).phase = d.node(u).phase + d.node(v).phase;
  for (const Edge& e : incident_edges(d, v)) {
    if (e.a == v && e.b == v)
      d.add_edge(u, u);
    else {
      int other = e.a == v ? e.b : e.a;
      if (other != u) d.add_edge(u, other);
    }
  }
  d.remove_node(v);
  cons.push_back(v);
  (void)prod;
  return {1.0, 0.0};
}

cplx apply_identity_remove(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                           std::vector<int>& prod) {
  int u = s.nodes[0];
  std::vector<int> nb = d.neighbours(u);  // two entries, possibly equal
  d.remove_node(u);
  d.add_edge(nb[0], nb[1]);
  cons.push_back(u);
  (void)prod;
  return {1.0, 0.0};
}

cplx apply_colour_change(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                         std::vector<int>& prod) {
  (void)prod;
  if (s.nodes.size() == 2) {  // HH cancellation on a wire
    int x = s.nodes[0], y = s.nodes[1];
    std::vector<int> xn = d.neighbours(x);
    std::vector<int> yn = d.neighbours(y);
    int a = xn[0] == y ? xn[1] : xn[0];
    int b = yn[0] == x ? yn[1] : yn[0];
    d.remove_node(x);
    d.remove_node(y);
    d.add_edge(a, b);
    cons.push_back(x);
    cons.push_back(y);
    return {1.0, 0.0};
  }
  int u = s.nodes[0];
  std::vector<int> hs = d.neighbours(u);
  d.node_mut(u).kind = other_colour(d.node(u).kind);
  for (int h : hs) {
    std::vector<int> hn = d.neighbours(h);
    int far = hn[0] == u ? hn[1] : hn[0];
    d.remove_node(h);
    d.add_edge(u, far);
    cons.push_back(h);
  }
  return {1.0, 0.0};
}

cplx apply_pi_commute(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                      std::vector<int>& prod) {
  int p = s.nodes[0], z = s.nodes[1];
  const NodeKind pi_colour = d.node(p).kind;
  const Phase alpha = d.node(z).phase;
  std::vector<int> nb = d.neighbours(p);
  int w = nb[0] == z ? nb[1] : nb[0];

  // z's legs other than the one through p, captured before surgery.
  std::vector<Edge> other_legs;
  for (const Edge& e : incident_edges(d, z))
    if (!(e.a == std::min(p, z) && e.b == std::max(p, z)))
      other_legs.push_back(e);
  // One p-z edge is the wire; p's removal drops it.
  d.remove_node(p);
  cons.push_back(p);
  for (const Edge& e : other_legs) {
    int y = e.a == z ? e.b : e.a;
    d.remove_edge(z, y);
    int q = d.add_node(pi_colour, Phase::pi());
    d.add_edge(z, q);
    d.add_edge(q, y);
    prod.push_back(q);
  }
  d.add_edge(w, z);
  d.node_mut(z).phase = -alpha;
  return std::polar(1.0, alpha.radians());
}

cplx apply_state_copy(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                      std::vector<int>& prod, bool pi_state) {
  int p = s.nodes[0], z = s.nodes[1];
  const NodeKind state_colour = d.node(p).kind;
  const Phase alpha = d.node(z).phase;
  std::vector<int> targets;
  for (const Edge& e : incident_edges(d, z)) {
    int y = e.a == z ? e.b : e.a;
    if (y != p) targets.push_back(y);
  }
  d.remove_node(p);
  d.remove_node(z);
  cons.push_back(p);
  cons.push_back(z);
  const Phase state_phase = pi_state ? Phase::pi() : Phase::zero();
  for (int y : targets) {
    int q = d.add_node(state_colour, state_phase);
    d.add_edge(q, y);
    prod.push_back(q);
  }
  const int m = static_cast<int>(targets.size());
  cplx delta = std::pow(SQRT2, 1 - m);
  if (pi_state) delta *= std::polar(1.0, alpha.radians());
  return delta;
}

cplx apply_bialgebra(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                     std::vector<int>& prod) {
  std::vector<int> zs, xs;
  for (int id : s.nodes)
    (d.node(id).kind == NodeKind::Z ? zs : xs).push_back(id);
  std::set<int> quad(s.nodes.begin(), s.nodes.end());
  auto external_of = [&](int id) {
    for (const Edge& e : incident_edges(d, id)) {
      int other = e.a == id ? e.b : e.a;
      if (!quad.count(other)) return other;
    }
    throw NoMatch("bialgebra site lost its external leg");
  };
  int ez1 = external_of(zs[0]), ez2 = external_of(zs[1]);
  int ex1 = external_of(xs[0]), ex2 = external_of(xs[1]);
  for (int id : s.nodes) {
    d.remove_node(id);
    cons.push_back(id);
  }
  // Colour roles swap sides: the new Z spider faces the X spiders' former
  // externals and vice versa.
  int nz = d.add_node(NodeKind::Z);
  int nx = d.add_node(NodeKind::X);
  d.add_edge(nz, ex1);
  d.add_edge(nz, ex2);
  d.add_edge(nx, ez1);
  d.add_edge(nx, ez2);
  d.add_edge(nz, nx);
  prod.push_back(nz);
  prod.push_back(nx);
  return {1.0 / SQRT2, 0.0};
}

cplx apply_hopf_cancel(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                       std::vector<int>& prod) {
  (void)cons;
  (void)prod;
  d.remove_edge(s.nodes[0], s.nodes[1]);
  d.remove_edge(s.nodes[0], s.nodes[1]);
  return {0.5, 0.0};
}

cplx apply_scalar_d(ZxDiagram& d, const Site& s, std::vector<int>& cons,
                    std::vector<int>& prod) {
  (void)prod;
  ComplexMatrix value = eval_diagram(subdiagram(d, s.nodes));
  for (int id : s.nodes) {
    d.remove_node(id);
    cons.push_back(id);
  }
  return value(0, 0);
}

}  // namespace

std::string rule_name(RuleId r) {
  switch (r) {
    case RuleId::SpiderFuse: return "SpiderFuse";
    case RuleId::IdentityRemove: return "IdentityRemove";
    case RuleId::ColorChange: return "ColorChange";
    case RuleId::PiCopy: return "PiCopy";
    case RuleId::PiCommute: return "PiCommute";
    case RuleId::CopyRule: return "CopyRule";
    case RuleId::Bialgebra: return "Bialgebra";
    case RuleId::HopfCancel: return "HopfCancel";
    case RuleId::ScalarD: return "ScalarD";
  }
  return "?";
}

bool matches(const ZxDiagram& d, RuleId rule, const Site& site) {
  switch (rule) {
    case RuleId::SpiderFuse: return match_spider_fuse(d, site);
    case RuleId::IdentityRemove: return match_identity_remove(d, site);
    case RuleId::ColorChange: return match_colour_change(d, site);
    case RuleId::PiCopy: return match_state_copy(d, site, true);
    case RuleId::PiCommute: return match_pi_commute(d, site);
    case RuleId::CopyRule: return match_state_copy(d, site, false);
    case RuleId::Bialgebra: return match_bialgebra(d, site);
    case RuleId::HopfCancel: return match_hopf_cancel(d, site);
    case RuleId::ScalarD: return match_scalar_d(d, site);
  }
  return false;
}

std::vector<Site> find_matches(const ZxDiagram& d, RuleId rule) {
  std::vector<Site> sites;
  auto consider = [&](std::vector<int> nodes) {
    Site s{std::move(nodes)};
    if (matches(d, rule, s)) sites.push_back(std::move(s));
  };

  switch (rule) {
    case RuleId::SpiderFuse:
      for (const Edge& e : distinct_edges(d)) {
        if (e.a == e.b)
          consider({e.a});
        else
          consider({e.a, e.b});
      }
      break;
    case RuleId::IdentityRemove:
      for (int u : d.node_ids()) consider({u});
      break;
    case RuleId::ColorChange:
      for (const Edge& e : distinct_edges(d))
        if (e.a != e.b) consider({e.a, e.b});
      for (int u : d.node_ids()) consider({u});
      break;
    case RuleId::PiCommute:
      for (int p : d.node_ids()) {
        std::set<int> seen;
        for (int z : d.neighbours(p))
          if (seen.insert(z).second) consider({p, z});
      }
      break;
    case RuleId::PiCopy:
    case RuleId::CopyRule:
      for (int p : d.node_ids()) {
        std::vector<int> nb = d.neighbours(p);
        if (nb.size() == 1) consider({p, nb[0]});
      }
      break;
    case RuleId::Bialgebra: {
      std::vector<int> zc, xc;
      for (int id : d.node_ids()) {
        if (!spider_at(d, id) || !d.node(id).phase.is_zero()) continue;
        if (d.degree(id) != 3 || d.self_loops(id) != 0) continue;
        (d.node(id).kind == NodeKind::Z ? zc : xc).push_back(id);
      }
      for (std::size_t i = 0; i < zc.size(); ++i)
        for (std::size_t j = i + 1; j < zc.size(); ++j)
          for (std::size_t k = 0; k < xc.size(); ++k)
            for (std::size_t l = k + 1; l < xc.size(); ++l) {
              std::vector<int> q{zc[i], zc[j], xc[k], xc[l]};
              std::sort(q.begin(), q.end());
              consider(std::move(q));
            }
      break;
    }
    case RuleId::HopfCancel:
      for (const Edge& e : distinct_edges(d))
        if (e.a != e.b) consider({e.a, e.b});
      break;
    case RuleId::ScalarD:
      for (const std::vector<int>& comp : components(d)) consider(comp);
      break;
  }
  std::sort(sites.begin(), sites.end(),
            [](const Site& a, const Site& b) { return a.nodes < b.nodes; });
  return sites;
}

std::pair<ZxDiagram, RewriteStep> apply_rule(const ZxDiagram& d, RuleId rule,
                                             const Site& site, bool verify) {
  if (!matches(d, rule, site)) {
    std::string ids;
    for (int n : site.nodes) ids += " " + std::to_string(n);
    throw NoMatch(rule_name(rule) + " does not apply at site{" + ids + " }");
  }
  ZxDiagram post = d;
  RewriteStep step;
  step.rule = rule;
  step.site = site.nodes;
  cplx delta{1.0, 0.0};
  switch (rule) {
    case RuleId::SpiderFuse:
      delta = apply_spider_fuse(post, site, step.consumed, step.produced);
      break;
    case RuleId::IdentityRemove:
      delta = apply_identity_remove(post, site, step.consumed, step.produced);
      break;
    case RuleId::ColorChange:
      delta = apply_colour_change(post, site, step.consumed, step.produced);
      break;
    case RuleId::PiCopy:
      delta = apply_state_copy(post, site, step.consumed, step.produced, true);
      break;
    case RuleId::PiCommute:
      delta = apply_pi_commute(post, site, step.consumed, step.produced);
      break;
    case RuleId::CopyRule:
      delta =
          apply_state_copy(post, site, step.consumed, step.produced, false);
      break;
    case RuleId::Bialgebra:
      delta = apply_bialgebra(post, site, step.consumed, step.produced);
      break;
    case RuleId::HopfCancel:
      delta = apply_hopf_cancel(post, site, step.consumed, step.produced);
      break;
    case RuleId::ScalarD:
      delta = apply_scalar_d(post, site, step.consumed, step.produced);
      break;
  }
  post.scalar *= delta;
  step.scalar_delta = delta;

  if (verify && evaluable(d) && evaluable(post)) {
    ComplexMatrix pre_m = eval_diagram(d);
    ComplexMatrix post_m = eval_diagram(post);
    double dev = pre_m.max_abs_diff(post_m);
    if (!(dev <= EQ_TOL))
      throw SoundnessViolation(rule_name(rule) + " changed the denoted map (max deviation " +
                               std::to_string(dev) + ")");
  }
  return {std::move(post), std::move(step)};
}

bool replay(const ZxDiagram& pre, const RewriteStep& step,
            const ZxDiagram& post) {
  ZxDiagram redo;
  RewriteStep redo_step;
  try {
    std::tie(redo, redo_step) = apply_rule(pre, step.rule, Site{step.site});
  } catch (const Error&) {
    return false;
  }
  if (redo_step.consumed != step.consumed) return false;
  if (redo_step.produced != step.produced) return false;
  if (redo_step.scalar_delta != step.scalar_delta) return false;
  if (redo.scalar != post.scalar) return false;
  if (redo.n_nodes() != post.n_nodes()) return false;
  for (int id : redo.node_ids()) {
    if (!post.has_node(id)) return false;
    const ZxNode& a = redo.node(id);
    const ZxNode& b = post.node(id);
    if (a.kind != b.kind || a.phase != b.phase || a.pos != b.pos) return false;
  }
  return redo.edges() == post.edges();
}

std::string step_log_json(const std::vector<RewriteStep>& steps) {
  nlohmann::ordered_json log = nlohmann::ordered_json::array();
  for (const RewriteStep& s : steps) {
    nlohmann::ordered_json js;
    js["rule"] = rule_name(s.rule);
    js["site"] = s.site;
    js["consumed"] = s.consumed;
    js["produced"] = s.produced;
    js["scalar_delta"] = {{"re", s.scalar_delta.real()},
                          {"im", s.scalar_delta.imag()}};
    log.push_back(std::move(js));
  }
  return log.dump(2) + "\n";
}

}  // namespace zx
}  // namespace zxforge
