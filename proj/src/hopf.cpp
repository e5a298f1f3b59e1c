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

#include "zxforge/hopf.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "zxforge/errors.hpp"
#include "zxforge/zx_eval.hpp"

namespace zxforge {
namespace hopf {

namespace {

void require_shape(const ComplexMatrix& mat, std::size_t r, std::size_t c,
                   const char* what) {
  if (mat.rows() != r || mat.cols() != c)
    throw ShapeError(std::string(what) + " must be " + std::to_string(r) +
                     "x" + std::to_string(c) + ", got " +
                     std::to_string(mat.rows()) + "x" +
                     std::to_string(mat.cols()));
}

void require_algebra_shapes(const HopfStructure& h) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  if (h.dim <= 0) throw ShapeError("structure dimension must be positive");
  require_shape(h.m, d, d * d, "m");
  require_shape(h.eta, d, 1, "eta");
}

void require_coalgebra_shapes(const HopfStructure& h) {
  const std::size_t d = static_cast<std::size_t>(h.dim);
  if (h.dim <= 0) throw ShapeError("structure dimension must be positive");
  require_shape(h.delta, d * d, d, "delta");
  require_shape(h.eps, 1, d, "eps");
}

}  // namespace

void AxiomReport::add(const std::string& name, double deviation) {
  checks.push_back({name, deviation, deviation <= tol});
}

void AxiomReport::merge(const std::string& prefix, const AxiomReport& other) {
  for (const AxiomCheck& c : other.checks)
    checks.push_back({prefix + "/" + c.name, c.deviation, c.pass});
}

bool AxiomReport::all_pass() const {
  for (const AxiomCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

double AxiomReport::max_deviation() const {
  double m = 0.0;
  for (const AxiomCheck& c : checks) m = std::max(m, c.deviation);
  return m;
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
  for (const AxiomCheck& c : checks)
    if (c.name == name) return c;
  throw Error("no axiom check named '" + name + "'");
}

std::string AxiomReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["tol"] = tol;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const AxiomCheck& c : checks)
    doc["checks"].push_back({{"name", c.name},
                             {"deviation", c.deviation},
                             {"pass", c.pass}});
  doc["all_pass"] = all_pass();
  doc["max_deviation"] = max_deviation();
  return doc.dump(2) + "\n";
}

ComplexMatrix swap_matrix(int d) {
  const std::size_t n = static_cast<std::size_t>(d);
  ComplexMatrix s(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1.0;
  return s;
}

AxiomReport check_algebra(const HopfStructure& h, double tol) {
  require_algebra_shapes(h);
  const std::size_t d = static_cast<std::size_t>(h.dim);
  const ComplexMatrix id = ComplexMatrix::identity(d);

  AxiomReport rep;
  rep.tol = tol;
  rep.add("associativity",
          (h.m * kron(h.m, id)).max_abs_diff(h.m * kron(id, h.m)));
  rep.add("unit_left", (h.m * kron(h.eta, id)).max_abs_diff(id));
  rep.add("unit_right", (h.m * kron(id, h.eta)).max_abs_diff(id));
  return rep;
}

AxiomReport check_coalgebra(const HopfStructure& h, double tol) {
  require_coalgebra_shapes(h);
  const std::size_t d = static_cast<std::size_t>(h.dim);
  const ComplexMatrix id = ComplexMatrix::identity(d);

  AxiomReport rep;
  rep.tol = tol;
  rep.add("coassociativity", (kron(h.delta, id) * h.delta)
                                 .max_abs_diff(kron(id, h.delta) * h.delta));
  rep.add("counit_left", (kron(h.eps, id) * h.delta).max_abs_diff(id));
  rep.add("counit_right", (kron(id, h.eps) * h.delta).max_abs_diff(id));
  return rep;
}

AxiomReport check_unnormalized_bialgebra(const HopfStructure& h, double tol) {
  require_algebra_shapes(h);
  require_coalgebra_shapes(h);
  const std::size_t d = static_cast<std::size_t>(h.dim);
  const ComplexMatrix id = ComplexMatrix::identity(d);
  const cplx loz{h.lozenge, 0.0};

  AxiomReport rep;
  rep.tol = tol;
  rep.add("unit_copies",
          ((h.delta * h.eta) * loz).max_abs_diff(kron(h.eta, h.eta)));
  const ComplexMatrix mixer =
      kron(h.m, h.m) * kron(kron(id, swap_matrix(h.dim)), id) *
      kron(h.delta, h.delta);
  rep.add("product_morphism", (mixer * loz).max_abs_diff(h.delta * h.m));
  rep.add("counit_unit_pairing",
          std::abs((h.eps * h.eta)(0, 0) - loz));
  rep.add("counit_morphism",
          ((h.eps * h.m) * loz).max_abs_diff(kron(h.eps, h.eps)));
  return rep;
}

AxiomReport check_antipode(const HopfStructure& h, double tol) {
  require_algebra_shapes(h);
  require_coalgebra_shapes(h);
  const std::size_t d = static_cast<std::size_t>(h.dim);
  require_shape(h.S, d, d, "S");
  const ComplexMatrix id = ComplexMatrix::identity(d);
  const cplx loz2{h.lozenge * h.lozenge, 0.0};
  const ComplexMatrix target = h.eta * h.eps;

  AxiomReport rep;
  rep.tol = tol;
  rep.add("antipode_left",
          ((h.m * kron(h.S, id) * h.delta) * loz2).max_abs_diff(target));
  rep.add("antipode_right",
          ((h.m * kron(id, h.S) * h.delta) * loz2).max_abs_diff(target));
  return rep;
}

AxiomReport check_f_algebra(const ComplexMatrix& m, const ComplexMatrix& eta,
                            const ComplexMatrix& delta,
                            const ComplexMatrix& eps, double tol) {
  if (m.rows() == 0 || m.rows() * m.rows() != m.cols())
    throw ShapeError("m must be d x d^2");
  const std::size_t d = m.rows();
  require_shape(eta, d, 1, "eta");
  require_shape(delta, d * d, d, "delta");
  require_shape(eps, 1, d, "eps");
  const ComplexMatrix id = ComplexMatrix::identity(d);

  const ComplexMatrix middle = delta * m;
  AxiomReport rep;
  rep.tol = tol;
  rep.add("frobenius_left",
          (kron(id, m) * kron(delta, id)).max_abs_diff(middle));
  rep.add("frobenius_right",
          (kron(m, id) * kron(id, delta)).max_abs_diff(middle));
  return rep;
}

HopfStructure assemble(const HopfStructure& alg, const HopfStructure& coalg,
                       const ComplexMatrix& S) {
  if (alg.dim != coalg.dim)
    throw ShapeError("cannot assemble structures of dimensions " +
                     std::to_string(alg.dim) + " and " +
                     std::to_string(coalg.dim));
  require_algebra_shapes(alg);
  require_coalgebra_shapes(coalg);
  HopfStructure h;
  h.dim = alg.dim;
  h.m = alg.m;
  h.eta = alg.eta;
  h.delta = coalg.delta;
  h.eps = coalg.eps;
  h.S = S;
  const cplx pairing = (coalg.eps * alg.eta)(0, 0);
  if (std::abs(pairing.imag()) > STRUCT_TOL ||
      std::abs(pairing.real()) <= STRUCT_TOL)
    throw ShapeError("eps.eta pairing is not a nonzero real; no "
                     "normalization constant for this assembly");
  h.lozenge = pairing.real();
  return h;
}

AxiomReport check_f_hopf(const HopfStructure& a, const HopfStructure& b,
                         double tol) {
  if (a.dim != b.dim)
    throw ShapeError("F-Hopf check needs equal dimensions, got " +
                     std::to_string(a.dim) + " and " + std::to_string(b.dim));
  AxiomReport rep;
  rep.tol = tol;
  rep.merge("first_f_algebra",
            check_f_algebra(a.m, a.eta, a.delta, a.eps, tol));
  rep.merge("second_f_algebra",
            check_f_algebra(b.m, b.eta, b.delta, b.eps, tol));

  const HopfStructure ab = assemble(a, b, a.S);
  rep.merge("first_alg_second_coalg/algebra", check_algebra(ab, tol));
  rep.merge("first_alg_second_coalg/coalgebra", check_coalgebra(ab, tol));
  rep.merge("first_alg_second_coalg/bialgebra",
            check_unnormalized_bialgebra(ab, tol));
  rep.merge("first_alg_second_coalg/antipode", check_antipode(ab, tol));

  const HopfStructure ba = assemble(b, a, a.S);
  rep.merge("second_alg_first_coalg/algebra", check_algebra(ba, tol));
  rep.merge("second_alg_first_coalg/coalgebra", check_coalgebra(ba, tol));
  rep.merge("second_alg_first_coalg/bialgebra",
            check_unnormalized_bialgebra(ba, tol));
  rep.merge("second_alg_first_coalg/antipode", check_antipode(ba, tol));
  return rep;
}

HopfStructure rescale_normalized(const HopfStructure& h) {
  if (h.lozenge == 0.0) throw ShapeError("lozenge must be nonzero");
  HopfStructure r = h;
  r.delta = h.delta * cplx{h.lozenge, 0.0};
  r.eps = h.eps * cplx{1.0 / h.lozenge, 0.0};
  r.lozenge = 1.0;
  return r;
}

std::pair<HopfStructure, HopfStructure> build_group_algebra(int n) {
  if (n < 1) throw ShapeError("group order must be >= 1");
  const std::size_t d = static_cast<std::size_t>(n);

  HopfStructure conv;  // group multiplication side
  conv.dim = n;
  conv.m = ComplexMatrix(d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) conv.m((a + b) % d, a * d + b) = 1.0;
  conv.eta = ComplexMatrix(d, 1);
  conv.eta(0, 0) = 1.0;
  conv.delta = ComplexMatrix(d * d, d);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t l = 0; l < d; ++l) conv.delta(h * d + l, (h + l) % d) = 1.0;
  conv.eps = ComplexMatrix(1, d);
  conv.eps(0, 0) = 1.0;
  conv.S = ComplexMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a) conv.S((d - a) % d, a) = 1.0;
  conv.lozenge = 1.0;

  HopfStructure pw;  // pointwise multiplication side
  pw.dim = n;
  pw.m = ComplexMatrix(d, d * d);
  for (std::size_t a = 0; a < d; ++a) pw.m(a, a * d + a) = 1.0;
  pw.eta = ComplexMatrix(d, 1);
  for (std::size_t a = 0; a < d; ++a) pw.eta(a, 0) = 1.0;
  pw.delta = ComplexMatrix(d * d, d);
  for (std::size_t a = 0; a < d; ++a) pw.delta(a * d + a, a) = 1.0;
  pw.eps = ComplexMatrix(1, d);
  for (std::size_t a = 0; a < d; ++a) pw.eps(0, a) = 1.0;
  pw.S = conv.S;
  pw.lozenge = 1.0;
  return {conv, pw};
}

namespace {

// Evaluates one spider with the given boundary shape into its tensor.
ComplexMatrix spider_block(zx::NodeKind colour, int n_in, int n_out) {
  zx::ZxDiagram d;
  int s = d.add_node(colour);
  for (int i = 0; i < n_in; ++i) {
    int b = d.add_node(zx::NodeKind::In, Phase::zero(), i);
    d.add_edge(b, s);
  }
  for (int o = 0; o < n_out; ++o) {
    int b = d.add_node(zx::NodeKind::Out, Phase::zero(), o);
    d.add_edge(s, b);
  }
  return zx::eval_diagram(d);
}

HopfStructure spider_structure(zx::NodeKind colour) {
  HopfStructure h;
  h.dim = 2;
  h.m = spider_block(colour, 2, 1);
  h.eta = spider_block(colour, 0, 1);
  h.delta = spider_block(colour, 1, 2);
  h.eps = spider_block(colour, 1, 0);
  h.S = ComplexMatrix::identity(2);
  h.lozenge = std::sqrt(2.0);
  return h;
}

}  // namespace

std::pair<HopfStructure, HopfStructure> zx_structures() {
  return {spider_structure(zx::NodeKind::X),
          spider_structure(zx::NodeKind::Z)};
}

}  // namespace hopf
}  // namespace zxforge
