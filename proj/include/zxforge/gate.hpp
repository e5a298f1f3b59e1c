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
#include <vector>

#include "zxforge/complex_matrix.hpp"
#include "zxforge/phase.hpp"
#include "zxforge/state.hpp"

namespace zxforge {
namespace circ {

enum class GateKind { X, Y, Z, H, S, T, RZ, RX, CNOT, CCNOT };

int gate_arity(GateKind k);
std::string gate_name(GateKind k);
bool gate_has_angle(GateKind k);  // RZ / RX only

// Phase convention: Z_alpha = diag(1, e^{i alpha}), X_alpha = H Z_alpha H.
// S = Z_{pi/2} and T = Z_{pi/4} exactly (no extra global phase).
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  Phase angle;  // meaningful for RZ/RX only

  Gate(GateKind k, std::vector<int> t, Phase a = Phase::zero());
};

struct Circuit {
  int n_qubits;
  std::vector<Gate> gates;

  Circuit(int n, std::vector<Gate> g = {});
};

// The 2^k x 2^k matrix of the bare gate (k = arity), no embedding.
ComplexMatrix gate_base_matrix(const Gate& g);

// The 2^n x 2^n unitary embedding g at its targets, identity elsewhere.
ComplexMatrix gate_matrix(const Gate& g, int n_qubits);

// Ordered product of gate matrices, first gate applied first.
ComplexMatrix circuit_unitary(const Circuit& c);

// Runs the circuit on an input state without materializing the unitary.
StateVector simulate(const Circuit& c, const StateVector& input);

struct CloningReport {
  double fidelity_zero;  // source |0>
  double fidelity_one;   // source |1>
  double fidelity_plus;  // source |+>: |<++|out>|^2
  StateVector plus_output;
};

// CNOT with a |0> target copies the basis states exactly but sends |+>|0>
// to a Bell state instead of |+>|+>; the report carries the fidelities.
CloningReport cloning_counterexample();

}  // namespace circ
}  // namespace zxforge
