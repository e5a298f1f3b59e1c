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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "zxforge/complex_matrix.hpp"
#include "zxforge/eigen_hermitian.hpp"
#include "zxforge/errors.hpp"
#include "zxforge/kernels.hpp"
#include "zxforge/state.hpp"
#include "zxforge/tolerances.hpp"

using zxforge::cplx;
using zxforge::ComplexMatrix;

namespace {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cplx{dist(rng), dist(rng)};
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  return (a + a.dagger()) * cplx{0.5, 0.0};
}

}  // namespace

TEST_CASE("matmul matches a hand-computed 2x2 product") {
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = {1, 1};
  a(0, 1) = {0, 2};
  a(1, 0) = {3, 0};
  a(1, 1) = {-1, 0};
  b(0, 0) = {2, 0};
  b(0, 1) = {0, 1};
  b(1, 0) = {1, 0};
  b(1, 1) = {0, 0};
  const ComplexMatrix c = zxforge::ref::matmul(a, b);
  CHECK(std::abs(c(0, 0) - cplx{2, 4}) < 1e-15);
  CHECK(std::abs(c(0, 1) - cplx{-1, 1}) < 1e-15);
  CHECK(std::abs(c(1, 0) - cplx{5, 0}) < 1e-15);
  CHECK(std::abs(c(1, 1) - cplx{0, 3}) < 1e-15);
}

TEST_CASE("matmul rejects mismatched shapes") {
  ComplexMatrix a(2, 3), b(2, 2);
  CHECK_THROWS_AS(zxforge::ref::matmul(a, b), zxforge::DimensionMismatch);
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  std::mt19937_64 rng(7);
  // Cross the parallelization threshold so the OpenMP path actually runs.
  for (std::size_t n : {8u, 32u, 80u}) {
    const ComplexMatrix a = random_matrix(n, n, rng);
    const ComplexMatrix b = random_matrix(n, n, rng);
    const ComplexMatrix ms = zxforge::ref::matmul(a, b);
    const ComplexMatrix mp = zxforge::par::matmul(a, b);
    REQUIRE(ms.rows() == mp.rows());
    for (std::size_t r = 0; r < ms.rows(); ++r)
      for (std::size_t c = 0; c < ms.cols(); ++c) {
        CHECK(ms(r, c).real() == mp(r, c).real());
        CHECK(ms(r, c).imag() == mp(r, c).imag());
      }
    const ComplexMatrix ks = zxforge::ref::kron(a, b);
    const ComplexMatrix kp = zxforge::par::kron(a, b);
    CHECK(zxtest::max_abs_diff_mat(ks, kp) == 0.0);
  }
  std::uniform_int_distribution<int> qubit(0, 6);
  for (int trial = 0; trial < 4; ++trial) {
    const ComplexMatrix u = random_matrix(4, 4, rng);
    const ComplexMatrix m = random_matrix(128, 128, rng);
    int q1 = qubit(rng), q2 = qubit(rng);
    if (q1 == q2) q2 = (q1 + 1) % 7;
    const ComplexMatrix gs = zxforge::ref::apply_gate(u, 7, {q1, q2}, m);
    const ComplexMatrix gp = zxforge::par::apply_gate(u, 7, {q1, q2}, m);
    CHECK(zxtest::max_abs_diff_mat(gs, gp) == 0.0);
  }
}

TEST_CASE("kron satisfies the mixed-product property") {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = random_matrix(3, 2, rng);
  const ComplexMatrix b = random_matrix(2, 4, rng);
  const ComplexMatrix c = random_matrix(2, 3, rng);
  const ComplexMatrix d = random_matrix(3, 2, rng);
  // (A (x) C)(B (x) D) = AB (x) CD
  const ComplexMatrix lhs =
      zxforge::ref::matmul(zxforge::ref::kron(a, c), zxforge::ref::kron(b, d));
  const ComplexMatrix rhs =
      zxforge::ref::kron(zxforge::ref::matmul(a, b), zxforge::ref::matmul(c, d));
  CHECK(zxtest::max_abs_diff_mat(lhs, rhs) < 1e-12);
}

TEST_CASE("apply_gate equals the kron-embedded unitary") {
  std::mt19937_64 rng(13);
  const ComplexMatrix u = random_matrix(2, 2, rng);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix m = ComplexMatrix::identity(8);
  // Embed at qubit 1 of 3: I (x) U (x) I (qubit 0 is the most significant).
  const ComplexMatrix expect = zxforge::ref::kron(zxforge::ref::kron(id2, u), id2);
  const ComplexMatrix got = zxforge::ref::apply_gate(u, 3, {1}, m);
  CHECK(zxtest::max_abs_diff_mat(expect, got) < 1e-13);

  // Two-qubit embedding with swapped targets permutes the gate's indices.
  const ComplexMatrix u2 = random_matrix(4, 4, rng);
  const ComplexMatrix direct = zxforge::ref::apply_gate(u2, 2, {0, 1},
                                                        ComplexMatrix::identity(4));
  CHECK(zxtest::max_abs_diff_mat(direct, u2) < 1e-13);
}

TEST_CASE("state construction refuses more qubits than the cap") {
  CHECK_THROWS_AS(zxforge::StateVector(13, {cplx{1, 0}}), zxforge::TooLarge);
}

TEST_CASE("hermitian_eigen reconstructs the matrix") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 3u, 5u, 8u}) {
    const ComplexMatrix a = random_hermitian(n, rng);
    const zxforge::HermitianEigen eig = zxforge::hermitian_eigen(a);
    REQUIRE(eig.values.size() == n);
    // Ascending eigenvalues.
    for (std::size_t i = 1; i < n; ++i) CHECK(eig.values[i - 1] <= eig.values[i]);
    // A V = V diag(values)
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = eig.values[i];
    const ComplexMatrix lhs = a * eig.vectors;
    const ComplexMatrix rhs = eig.vectors * d;
    CHECK(zxtest::max_abs_diff_mat(lhs, rhs) < 1e-11);
    // Orthonormal eigenvectors.
    const ComplexMatrix gram = eig.vectors.dagger() * eig.vectors;
    CHECK(zxtest::max_abs_diff_mat(gram, ComplexMatrix::identity(n)) < 1e-12);
  }
}

TEST_CASE("hermitian_eigen on a known 2x2") {
  // Pauli X: eigenvalues -1 and +1.
  ComplexMatrix x(2, 2);
  x(0, 1) = 1;
  x(1, 0) = 1;
  const zxforge::HermitianEigen eig = zxforge::hermitian_eigen(x);
  CHECK(eig.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  ComplexMatrix a(2, 2);
  a(0, 1) = {1, 0};
  a(1, 0) = {2, 0};
  CHECK_THROWS_AS(zxforge::hermitian_eigen(a), zxforge::NotHermitian);
}

TEST_CASE("StateVector basics") {
  const zxforge::StateVector plus(1, {cplx{1 / std::sqrt(2.0), 0},
                                      cplx{1 / std::sqrt(2.0), 0}});
  CHECK(plus.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(plus.is_normalized());

  const zxforge::StateVector zero = zxforge::StateVector::basis(1, 0);
  CHECK(std::abs(plus.inner(zero) - cplx{1 / std::sqrt(2.0), 0}) < 1e-14);

  const zxforge::StateVector both = tensor(zero, plus);
  REQUIRE(both.dim() == 4);
  CHECK(std::abs(both.amp(0) - cplx{1 / std::sqrt(2.0), 0}) < 1e-14);
  CHECK(std::abs(both.amp(1) - cplx{1 / std::sqrt(2.0), 0}) < 1e-14);
  CHECK(std::abs(both.amp(2)) < 1e-14);

  CHECK_THROWS_AS(zxforge::StateVector(2, {cplx{1, 0}}), zxforge::DimensionMismatch);
}

TEST_CASE("bloch_to_state matches the closed form") {
  const double theta = 1.1, phi = 0.4;
  const zxforge::StateVector s = zxforge::bloch_to_state(theta, phi);
  CHECK(std::abs(s.amp(0) - cplx{std::cos(theta / 2), 0}) < 1e-14);
  CHECK(std::abs(s.amp(1) - std::exp(cplx{0, phi}) * std::sin(theta / 2)) < 1e-14);
  CHECK(s.is_normalized());
}

TEST_CASE("DensityOperator invariants are enforced") {
  // A valid mixed state.
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  const zxforge::DensityOperator rho(1, m);
  CHECK(rho.purity() == doctest::Approx(0.625).epsilon(1e-12));
  CHECK_FALSE(rho.is_pure());

  // Trace must be one.
  ComplexMatrix bad_trace(2, 2);
  bad_trace(0, 0) = 0.9;
  bad_trace(1, 1) = 0.3;
  CHECK_THROWS_AS(zxforge::DensityOperator(1, bad_trace), zxforge::ShapeError);

  // Hermiticity.
  ComplexMatrix bad_herm(2, 2);
  bad_herm(0, 0) = 0.5;
  bad_herm(1, 1) = 0.5;
  bad_herm(0, 1) = {0.1, 0.2};
  bad_herm(1, 0) = {0.1, 0.2};
  CHECK_THROWS_AS(zxforge::DensityOperator(1, bad_herm), zxforge::NotHermitian);

  // Positivity.
  ComplexMatrix bad_psd(2, 2);
  bad_psd(0, 0) = 1.5;
  bad_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(zxforge::DensityOperator(1, bad_psd), zxforge::NotPositive);
}

TEST_CASE("density_from_pure and ensembles") {
  const zxforge::StateVector plus(1, {cplx{1 / std::sqrt(2.0), 0},
                                      cplx{1 / std::sqrt(2.0), 0}});
  const zxforge::DensityOperator pure = zxforge::density_from_pure(plus);
  CHECK(pure.is_pure());
  CHECK(zxforge::purity_check(pure));
  CHECK(pure.matrix()(0, 1).real() == doctest::Approx(0.5).epsilon(1e-12));

  const zxforge::StateVector zero = zxforge::StateVector::basis(1, 0);
  const zxforge::StateVector one = zxforge::StateVector::basis(1, 1);
  const zxforge::DensityOperator mixed =
      zxforge::density_from_ensemble({zero, one}, {0.5, 0.5});
  CHECK_FALSE(mixed.is_pure());
  CHECK(mixed.purity() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(zxforge::density_from_ensemble({zero, one}, {0.7, 0.7}),
                  zxforge::BadProbabilities);
}
