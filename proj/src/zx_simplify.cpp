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

#include "zxforge/zx_simplify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zxforge/zx_eval.hpp"

namespace zxforge {
namespace zx {

namespace {

// Only push a pi spider through z when the node on its far side is a
// spider of z's own colour: the push then puts two same-colour spiders
// next to each other and the following fusion shrinks the diagram. An
// ungated push on a plain wire would commute back and forth forever.
bool pi_commute_gate(const ZxDiagram& d, const Site& site) {
  int p = site.nodes[0], z = site.nodes[1];
  std::vector<int> nb = d.neighbours(p);
  int w = nb[0] == z ? nb[1] : nb[0];
  return is_spider(d.node(w).kind) && d.node(w).kind == d.node(z).kind;
}

}  // namespace

SimplifyResult simplify(const ZxDiagram& d, const SimplifyConfig& config) {
  d.validate();
  const std::size_t limit =
      config.step_limit != 0
          ? config.step_limit
          : std::max<std::size_t>(100, 10 * d.n_nodes());

  SimplifyResult res;
  res.diagram = d;

  auto apply_at = [&](RuleId rule, const Site& site) {
    if (res.steps.size() >= limit)
      throw StepLimitExceeded("simplify exceeded the step limit of " +
                              std::to_string(limit));
    auto [post, step] =
        apply_rule(res.diagram, rule, site, config.verify_steps);
    res.diagram = std::move(post);
    res.steps.push_back(std::move(step));
  };
  auto exhaust = [&](RuleId rule) {
    bool any = false;
    for (;;) {
      std::vector<Site> sites = find_matches(res.diagram, rule);
      if (sites.empty()) return any;
      apply_at(rule, sites.front());
      any = true;
    }
  };
  auto once = [&](RuleId rule,
                  const std::function<bool(const ZxDiagram&, const Site&)>&
                      gate = nullptr) {
    for (const Site& site : find_matches(res.diagram, rule)) {
      if (gate && !gate(res.diagram, site)) continue;
      apply_at(rule, site);
      return true;
    }
    return false;
  };

  for (;;) {
    ++res.passes;
    bool changed = false;
    changed |= exhaust(RuleId::ScalarD);
    changed |= exhaust(RuleId::SpiderFuse);
    changed |= exhaust(RuleId::IdentityRemove);
    changed |= exhaust(RuleId::ColorChange);
    changed |= once(RuleId::PiCommute, pi_commute_gate);
    changed |= once(RuleId::PiCopy);
    changed |= once(RuleId::CopyRule);
    changed |= exhaust(RuleId::HopfCancel);
    changed |= once(RuleId::Bialgebra);
    if (!changed) break;
  }
  return res;
}

EquivReport verify_equivalence(const ZxDiagram& a, const ZxDiagram& b,
                               bool up_to_global_phase, double tol) {
  if (a.n_inputs() != b.n_inputs() || a.n_outputs() != b.n_outputs())
    throw TypeMismatch(
        "diagram types differ: " + std::to_string(a.n_inputs()) + "->" +
        std::to_string(a.n_outputs()) + " vs " + std::to_string(b.n_inputs()) +
        "->" + std::to_string(b.n_outputs()));

  const ComplexMatrix ma = eval_diagram(a);
  const ComplexMatrix mb = eval_diagram(b);

  EquivReport rep;
  rep.n_inputs = a.n_inputs();
  rep.n_outputs = a.n_outputs();
  if (up_to_global_phase) {
    cplx ip{0.0, 0.0};
    for (std::size_t r = 0; r < ma.rows(); ++r)
      for (std::size_t c = 0; c < ma.cols(); ++c)
        ip += std::conj(ma(r, c)) * mb(r, c);
    if (std::abs(ip) > 1e-300) rep.phase = ip / std::abs(ip);
  }
  double dev = 0.0;
  for (std::size_t r = 0; r < ma.rows(); ++r)
    for (std::size_t c = 0; c < ma.cols(); ++c)
      dev = std::max(dev, std::abs(rep.phase * ma(r, c) - mb(r, c)));
  rep.max_deviation = dev;
  rep.equivalent = dev <= tol;
  return rep;
}

}  // namespace zx
}  // namespace zxforge
