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

#include "zxforge/state.hpp"

#include <cmath>

#include "zxforge/eigen_hermitian.hpp"

namespace zxforge {

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 0) throw ShapeError("negative qubit count");
  if (n_qubits_ > MAX_QUBITS) throw TooLarge("more than MAX_QUBITS qubits");
  if (amps_.size() != (std::size_t{1} << n_qubits_))
    throw DimensionMismatch("amplitude vector length is not 2^n_qubits");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

cplx StateVector::inner(const StateVector& other) const {
  if (amps_.size() != other.amps_.size())
    throw DimensionMismatch("inner product of different-sized states");
  cplx s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  std::vector<cplx> a(std::size_t{1} << n_qubits, 0.0);
  if (index >= a.size()) throw IndexOutOfRange("basis index out of range");
  a[index] = 1.0;
  return StateVector(n_qubits, std::move(a));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<cplx> out;
  out.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out.push_back(a.amp(i) * b.amp(j));
  return StateVector(a.n_qubits() + b.n_qubits(), std::move(out));
}

DensityOperator::DensityOperator(int n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), mat_(std::move(matrix)) {
  const std::size_t dim = std::size_t{1} << n_qubits_;
  if (mat_.rows() != dim || mat_.cols() != dim)
    throw DimensionMismatch("density matrix is not 2^n x 2^n");
  if (!mat_.is_hermitian(STRUCT_TOL))
    throw NotHermitian("density matrix is not Hermitian");
  if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > STRUCT_TOL)
    throw ShapeError("density matrix trace is not 1");
  HermitianEigen eig = hermitian_eigen(mat_);
  if (eig.values.front() < PSD_TOL)
    throw NotPositive("density matrix has a negative eigenvalue");
}

double DensityOperator::purity() const {
  return (mat_ * mat_).trace().real();
}

bool DensityOperator::is_pure() const {
  ComplexMatrix sq = mat_ * mat_;
  return sq.max_abs_diff(mat_) <= PURITY_TOL;
}

StateVector bloch_to_state(double theta, double phi) {
  const cplx a = std::cos(theta / 2.0);
  const cplx b = std::exp(cplx(0.0, phi)) * std::sin(theta / 2.0);
  return StateVector(1, {a, b});
}

DensityOperator density_from_pure(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw NonNormalized("density_from_pure requires a normalized state");
  const std::size_t d = psi.dim();
  ComplexMatrix rho(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      rho(r, c) = psi.amp(r) * std::conj(psi.amp(c));
  return DensityOperator(psi.n_qubits(), std::move(rho));
}

DensityOperator density_from_ensemble(const std::vector<StateVector>& states,
                                      const std::vector<double>& probs) {
  if (states.size() != probs.size())
    throw DimensionMismatch("ensemble: states and probs differ in length");
  if (states.empty()) throw DimensionMismatch("ensemble: empty");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw BadProbabilities("ensemble: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > STRUCT_TOL)
    throw BadProbabilities("ensemble: probabilities do not sum to 1");

  const int n = states.front().n_qubits();
  const std::size_t d = states.front().dim();
  ComplexMatrix rho(d, d);
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s].n_qubits() != n)
      throw DimensionMismatch("ensemble: mixed qubit counts");
    if (std::abs(states[s].norm() - 1.0) > 1e-9)
      throw NonNormalized("ensemble: state not normalized");
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        rho(r, c) += probs[s] * states[s].amp(r) * std::conj(states[s].amp(c));
  }
  return DensityOperator(n, std::move(rho));
}

bool purity_check(const DensityOperator& rho) { return rho.is_pure(); }

}  // namespace zxforge
