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
//
// Shared helpers for the test binaries: seeded random diagram and family
// generators and fixture-file loading.

#pragma once

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zxforge/complex_matrix.hpp"
#include "zxforge/infogeo.hpp"
#include "zxforge/phase.hpp"
#include "zxforge/state.hpp"
#include "zxforge/zx_diagram.hpp"
#include "zxforge/zx_eval.hpp"
#include "zxforge/zx_io.hpp"

namespace zxtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(ZXFORGE_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline zxforge::zx::ZxDiagram load_fixture(const std::string& name) {
  return zxforge::zx::import_json(read_file(fixture_path(name)));
}

// A small random but always-valid diagram: 2-6 spiders with random phases,
// random multi-edges (self-loops and parallel edges included), 0-2 inputs
// and outputs, and a sprinkling of Hadamard nodes spliced onto edges.
inline zxforge::zx::ZxDiagram random_diagram(std::uint64_t seed) {
  using zxforge::zx::NodeKind;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  const auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  zxforge::zx::ZxDiagram d;
  const int n_spiders = pick(2, 6);
  std::vector<int> spiders;
  for (int i = 0; i < n_spiders; ++i) {
    const NodeKind kind = pick(0, 1) ? NodeKind::Z : NodeKind::X;
    const int den = 1 << pick(0, 2);  // 1, 2 or 4
    const zxforge::Phase phase(pick(0, 2 * den - 1), den);
    spiders.push_back(d.add_node(kind, phase));
  }

  const int n_edges = pick(n_spiders - 1, n_spiders + 3);
  for (int i = 0; i < n_edges; ++i) {
    const int a = spiders[pick(0, n_spiders - 1)];
    const int b = spiders[pick(0, n_spiders - 1)];
    if (a == b && pick(0, 3) != 0) continue;  // keep self-loops rare
    if (pick(0, 3) == 0) {
      // Splice a Hadamard node into this connection.
      const int h = d.add_node(NodeKind::H);
      d.add_edge(a, h);
      d.add_edge(h, b);
    } else {
      d.add_edge(a, b);
    }
  }

  const int n_in = pick(0, 2);
  for (int i = 0; i < n_in; ++i)
    d.add_edge(d.add_node(NodeKind::In, zxforge::Phase::zero(), i),
               spiders[pick(0, n_spiders - 1)]);
  const int n_out = pick(0, 2);
  for (int i = 0; i < n_out; ++i)
    d.add_edge(d.add_node(NodeKind::Out, zxforge::Phase::zero(), i),
               spiders[pick(0, n_spiders - 1)]);
  return d;
}

// The next `count` seeds (starting at `first_seed`) whose random diagram is
// valid and small enough to evaluate.
inline std::vector<zxforge::zx::ZxDiagram> random_evaluable_diagrams(
    std::uint64_t first_seed, int count) {
  std::vector<zxforge::zx::ZxDiagram> out;
  std::uint64_t seed = first_seed;
  while (static_cast<int>(out.size()) < count) {
    zxforge::zx::ZxDiagram d = random_diagram(seed++);
    if (zxforge::zx::evaluable(d)) out.push_back(std::move(d));
  }
  return out;
}

// A smooth full-rank single-qubit density family: the Bloch vector follows
// a random trigonometric curve strictly inside the ball.
inline zxforge::DensityFamily random_qubit_family(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> shift(0.0, 6.28318530717958648);
  struct Curve {
    double ax, bx, px, ay, by, py, az, bz, pz;
  } c{amp(rng), amp(rng), shift(rng), amp(rng), amp(rng), shift(rng),
      amp(rng), amp(rng), shift(rng)};

  zxforge::DensityFamily f;
  f.rho = [c](double t) {
    const double rx = c.ax * std::sin(t + c.px) + 0.3 * c.bx * std::cos(2 * t);
    const double ry = c.ay * std::sin(t + c.py) + 0.3 * c.by * std::cos(2 * t);
    const double rz = c.az * std::sin(t + c.pz) + 0.3 * c.bz * std::cos(2 * t);
    const double len = std::sqrt(rx * rx + ry * ry + rz * rz);
    const double scale = 0.85 / (1.0 + len);  // keeps |r| < 0.85: full rank
    const double x = scale * rx, y = scale * ry, z = scale * rz;
    zxforge::ComplexMatrix m(2, 2);
    m(0, 0) = 0.5 * (1 + z);
    m(1, 1) = 0.5 * (1 - z);
    m(0, 1) = 0.5 * zxforge::cplx{x, -y};
    m(1, 0) = 0.5 * zxforge::cplx{x, y};
    return zxforge::DensityOperator(1, m);
  };
  return f;
}

inline double max_abs_diff_mat(const zxforge::ComplexMatrix& a,
                               const zxforge::ComplexMatrix& b) {
  double m = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

}  // namespace zxtest
