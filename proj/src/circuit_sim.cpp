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

#include <cmath>
#include <numbers>
#include <set>

#include "zxforge/gate.hpp"
#include "zxforge/kernels.hpp"
#include "zxforge/tolerances.hpp"

namespace zxforge {
namespace circ {

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
      return 2;
    case GateKind::CCNOT:
      return 3;
    default:
      return 1;
  }
}

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::T:
      return "T";
    case GateKind::RZ:
      return "RZ";
    case GateKind::RX:
      return "RX";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CCNOT:
      return "CCNOT";
  }
  return "?";
}

bool gate_has_angle(GateKind k) {
  return k == GateKind::RZ || k == GateKind::RX;
}

Gate::Gate(GateKind k, std::vector<int> t, Phase a)
    : kind(k), targets(std::move(t)), angle(a) {
  if (static_cast<int>(targets.size()) != gate_arity(kind))
    throw ShapeError("gate arity mismatch for " + gate_name(kind));
  std::set<int> uniq(targets.begin(), targets.end());
  if (uniq.size() != targets.size())
    throw ShapeError("gate targets must be distinct");
}

Circuit::Circuit(int n, std::vector<Gate> g)
    : n_qubits(n), gates(std::move(g)) {
  if (n_qubits <= 0) throw ShapeError("circuit needs at least one qubit");
  for (const Gate& gate : gates)
    for (int t : gate.targets)
      if (t < 0 || t >= n_qubits)
        throw IndexOutOfRange("gate target exceeds declared qubit count");
}

namespace {

const double INV_SQRT2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix z_rotation(const Phase& a) {
  return ComplexMatrix{{1.0, 0.0}, {0.0, std::exp(cplx(0.0, a.radians()))}};
}

ComplexMatrix hadamard() {
  return ComplexMatrix{{INV_SQRT2, INV_SQRT2}, {INV_SQRT2, -INV_SQRT2}};
}

// Embedding kernel dispatch: serial for small operands, OpenMP above.
ComplexMatrix apply_gate_auto(const ComplexMatrix& u, int n,
                              const std::vector<int>& targets,
                              const ComplexMatrix& m) {
  if (m.size() >= 64 * 64) return par::apply_gate(u, n, targets, m);
  return ref::apply_gate(u, n, targets, m);
}

}  // namespace

ComplexMatrix gate_base_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
      return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::Y:
      return ComplexMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
    case GateKind::Z:
      return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    case GateKind::H:
      return hadamard();
    case GateKind::S:
      return z_rotation(Phase(1, 2));
    case GateKind::T:
      return z_rotation(Phase(1, 4));
    case GateKind::RZ:
      return z_rotation(g.angle);
    case GateKind::RX: {
      ComplexMatrix h = hadamard();
      return h * z_rotation(g.angle) * h;
    }
    case GateKind::CNOT:
      return ComplexMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case GateKind::CCNOT: {
      ComplexMatrix m = ComplexMatrix::identity(8);
      m(6, 6) = 0.0;
      m(7, 7) = 0.0;
      m(6, 7) = 1.0;
      m(7, 6) = 1.0;
      return m;
    }
  }
  throw ShapeError("unknown gate kind");
}

ComplexMatrix gate_matrix(const Gate& g, int n_qubits) {
  if (n_qubits > MAX_QUBITS) throw TooLarge("more than MAX_QUBITS qubits");
  ComplexMatrix id = ComplexMatrix::identity(std::size_t{1} << n_qubits);
  return apply_gate_auto(gate_base_matrix(g), n_qubits, g.targets, id);
}

ComplexMatrix circuit_unitary(const Circuit& c) {
  if (c.n_qubits > MAX_QUBITS)
    throw TooLarge("circuit wider than MAX_QUBITS qubits");
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.n_qubits);
  for (const Gate& g : c.gates)
    u = apply_gate_auto(gate_base_matrix(g), c.n_qubits, g.targets, u);
  return u;
}

StateVector simulate(const Circuit& c, const StateVector& input) {
  if (input.n_qubits() != c.n_qubits)
    throw DimensionMismatch("input state does not match circuit width");
  std::vector<cplx> amps = input.amplitudes();
  for (const Gate& g : c.gates)
    amps = ref::apply_gate_state(gate_base_matrix(g), c.n_qubits, g.targets,
                                 amps);
  return StateVector(c.n_qubits, std::move(amps));
}

CloningReport cloning_counterexample() {
  Circuit copier(2, {Gate(GateKind::CNOT, {0, 1})});

  auto fidelity_for = [&](const StateVector& source) {
    StateVector in = tensor(source, StateVector::basis(1, 0));
    StateVector out = simulate(copier, in);
    StateVector want = tensor(source, source);
    return std::pair{std::norm(want.inner(out)), out};
  };

  StateVector plus(1, {INV_SQRT2, INV_SQRT2});
  auto [f0, o0] = fidelity_for(StateVector::basis(1, 0));
  auto [f1, o1] = fidelity_for(StateVector::basis(1, 1));
  auto [fp, op] = fidelity_for(plus);
  return CloningReport{f0, f1, fp, op};
}

}  // namespace circ
}  // namespace zxforge
