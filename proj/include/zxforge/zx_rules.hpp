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
#include <utility>
#include <vector>

#include "zxforge/zx_diagram.hpp"

namespace zxforge {
namespace zx {

// The local rewrite rules. Every rule preserves the denoted linear map
// exactly (global scalar included); each rule's scalar_delta below is the
// value that makes the tensor evaluator check pass, asserted in the tests.
//
//   SpiderFuse     site {u,v}: same-colour spiders joined by >=1 edge merge
//                  into u; phases add, all connecting edges vanish. Site {u}:
//                  one plain self-loop on a spider is removed. delta 1.
//   IdentityRemove site {u}: a phase-0 degree-2 spider with two distinct
//                  non-loop edges is cut out, its endpoints joined. delta 1.
//   ColorChange    site {u}: a spider whose every edge runs through its own
//                  degree-2 Hadamard node flips colour and absorbs them.
//                  site {x,y}: two Hadamard nodes wired in sequence cancel.
//                  delta 1.
//   PiCommute      site {p,z}: a degree-2 pi-phase spider between z (a
//                  spider of the other colour, phase a) and some third node
//                  pushes through z: z's phase becomes -a and fresh pi
//                  spiders appear on z's remaining legs. delta e^{ia}.
//   PiCopy         site {p,z}: a degree-1 pi-phase spider feeds a spider z
//                  of the other colour (phase a, degree k+1); both die and k
//                  pi states appear on z's former legs. delta e^{ia} *
//                  sqrt(2)^(1-k).
//   CopyRule       site {p,z}: same with a phase-0 state; z's phase drops
//                  out (the state selects the phase-free branch of z's
//                  tensor). delta sqrt(2)^(1-k).
//   Bialgebra      site {4 ids}: the complete-bipartite square of two
//                  phase-0 degree-3 Z spiders and two phase-0 degree-3 X
//                  spiders contracts to one Z-X pair with the colours
//                  facing the opposite sides. delta 1/sqrt(2).
//   HopfCancel     site {u,v}: two parallel edges between a Z and an X
//                  spider (any phases) are removed. delta 1/2.
//   ScalarD        site {component}: a boundary-free connected component is
//                  evaluated to a number and folded into the global scalar.
//                  delta = that number.
enum class RuleId {
  SpiderFuse,
  IdentityRemove,
  ColorChange,
  PiCopy,
  PiCommute,
  CopyRule,
  Bialgebra,
  HopfCancel,
  ScalarD,
};

inline constexpr RuleId ALL_RULES[] = {
    RuleId::SpiderFuse, RuleId::IdentityRemove, RuleId::ColorChange,
    RuleId::PiCopy,     RuleId::PiCommute,      RuleId::CopyRule,
    RuleId::Bialgebra,  RuleId::HopfCancel,     RuleId::ScalarD,
};

std::string rule_name(RuleId r);

// A match location: node ids in the rule's canonical order (see RuleId).
struct Site {
  std::vector<int> nodes;
};

// Audit record of one applied rewrite. Applying `rule` at `site` on the
// pre-diagram reproduces the post-diagram exactly (same ids, same scalar);
// `replay` below checks precisely that.
struct RewriteStep {
  RuleId rule;
  std::vector<int> site;      // the matched nodes
  std::vector<int> consumed;  // node ids deleted
  std::vector<int> produced;  // node ids created
  cplx scalar_delta{1.0, 0.0};
};

// JSON array of the steps: rule name, site/consumed/produced ids and
// scalar_delta as {"re","im"}.
std::string step_log_json(const std::vector<RewriteStep>& steps);

// All sites where `rule` applies, ordered by their node-id lists
// (lexicographically), so "first match" is deterministic.
std::vector<Site> find_matches(const ZxDiagram& d, RuleId rule);

// True when `rule` applies at exactly this site on d.
bool matches(const ZxDiagram& d, RuleId rule, const Site& site);

// Applies the rule at the site on a copy; the input diagram is untouched.
// Throws NoMatch when the site does not satisfy the rule's matcher. With
// `verify` set and both sides evaluable, checks eval(post) == eval(pre)
// entrywise to EQ_TOL and throws SoundnessViolation on failure.
std::pair<ZxDiagram, RewriteStep> apply_rule(const ZxDiagram& d, RuleId rule,
                                             const Site& site,
                                             bool verify = false);

// Re-applies the recorded step and checks the result matches `post`
// exactly (nodes, edges and scalar). Returns false on any mismatch.
bool replay(const ZxDiagram& pre, const RewriteStep& step,
            const ZxDiagram& post);

}  // namespace zx
}  // namespace zxforge
