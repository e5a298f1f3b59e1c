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

#include <utility>
#include <vector>

#include "zxforge/tolerances.hpp"
#include "zxforge/zx_rules.hpp"

namespace zxforge {
namespace zx {

struct SimplifyConfig {
  // Hard cap on applied steps; 0 means the default of 10x the node count
  // (at least 100). Exceeding it raises StepLimitExceeded.
  std::size_t step_limit = 0;
  // Re-evaluate the diagram after every step and raise SoundnessViolation
  // on drift, whenever the diagram is small enough to evaluate.
  bool verify_steps = false;
};

struct SimplifyResult {
  ZxDiagram diagram;
  std::vector<RewriteStep> steps;
  std::size_t passes = 0;
};

// Runs the rewrite strategy to a fixpoint and returns the reduced diagram
// plus the full step log. Per pass: (1) fold closed components into the
// scalar, (2) fuse spiders to exhaustion, (3) cut identity spiders,
// (4) cancel HH pairs and flip fully-H-surrounded spiders (both strictly
// reduce the Hadamard count), (5) one gated PiCommute, one PiCopy, one
// CopyRule, (6) remove parallel Z-X edge pairs to exhaustion, (7) one
// Bialgebra contraction. The PiCommute gate only pushes a pi spider when
// the node behind it is a spider of the commuted spider's colour, so the
// push always enables a fusion instead of bouncing on a wire.
SimplifyResult simplify(const ZxDiagram& d, const SimplifyConfig& config = {});

struct EquivReport {
  bool equivalent = false;
  double max_deviation = 0.0;
  // The phase factor applied to the first diagram's matrix before
  // comparison; 1 unless up_to_global_phase was set.
  cplx phase{1.0, 0.0};
  int n_inputs = 0;
  int n_outputs = 0;
};

// Evaluates both diagrams and compares entrywise; with up_to_global_phase
// the first matrix is rotated by the inner-product-optimal unit phase
// first. Throws TypeMismatch when the boundary shapes differ and TooLarge
// past the evaluator caps.
EquivReport verify_equivalence(const ZxDiagram& a, const ZxDiagram& b,
                               bool up_to_global_phase = false,
                               double tol = EQ_TOL);

}  // namespace zx
}  // namespace zxforge
