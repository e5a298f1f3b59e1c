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

#include <vector>

#include "zxforge/complex_matrix.hpp"
#include "zxforge/tolerances.hpp"

namespace zxforge {

// Pure state on n qubits. Basis index i encodes the bitstring of i with the
// most significant bit belonging to qubit 0 (the top wire), so |ij> = |i>|j>.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  int n_qubits() const { return n_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amp(std::size_t i) const { return amps_[i]; }
  std::size_t dim() const { return amps_.size(); }

  double norm() const;
  bool is_normalized(double tol = STRUCT_TOL) const;

  // <this|other>
  cplx inner(const StateVector& other) const;

  static StateVector basis(int n_qubits, std::size_t index);

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

StateVector tensor(const StateVector& a, const StateVector& b);

// Hermitian, unit-trace, PSD operator. All three invariants are checked at
// construction (PSD via the Hermitian eigensolver, eigenvalues allowed to
// dip to PSD_TOL below zero).
class DensityOperator {
 public:
  DensityOperator(int n_qubits, ComplexMatrix matrix);

  int n_qubits() const { return n_qubits_; }
  const ComplexMatrix& matrix() const { return mat_; }

  double purity() const;  // tr(rho^2), real part
  bool is_pure() const;   // ||rho^2 - rho||_max <= PURITY_TOL

 private:
  int n_qubits_;
  ComplexMatrix mat_;
};

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, the global phase fixed to 0.
StateVector bloch_to_state(double theta, double phi);

DensityOperator density_from_pure(const StateVector& psi);

DensityOperator density_from_ensemble(const std::vector<StateVector>& states,
                                      const std::vector<double>& probs);

// True iff rho is idempotent within PURITY_TOL, i.e. the state is pure.
bool purity_check(const DensityOperator& rho);

}  // namespace zxforge
