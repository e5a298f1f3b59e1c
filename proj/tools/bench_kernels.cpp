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
// Times the serial reference kernels against the OpenMP ones on the dense
// workloads the library actually runs (matmul, kron, gate embedding) and
// confirms the outputs are bit-identical.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zxforge/complex_matrix.hpp"
#include "zxforge/kernels.hpp"

namespace {

using zxforge::cplx;
using zxforge::ComplexMatrix;

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cplx{dist(rng), dist(rng)};
  return m;
}

bool bit_identical(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

template <typename F>
double time_ms(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run the serial code path\n");
#endif
  std::printf("%-28s %12s %12s %9s %6s\n", "kernel", "serial (ms)", "openmp (ms)",
              "speedup", "equal");

  std::mt19937_64 rng(12345);
  bool all_equal = true;

  for (std::size_t n : {64u, 128u, 256u, 384u}) {
    const ComplexMatrix a = random_matrix(n, n, rng);
    const ComplexMatrix b = random_matrix(n, n, rng);
    ComplexMatrix rs(1, 1), rp(1, 1);
    const int reps = n <= 128 ? 5 : 2;
    const double ts = time_ms([&] { rs = zxforge::ref::matmul(a, b); }, reps);
    const double tp = time_ms([&] { rp = zxforge::par::matmul(a, b); }, reps);
    const bool eq = bit_identical(rs, rp);
    all_equal = all_equal && eq;
    std::printf("matmul %4zux%-4zu              %12.3f %12.3f %8.2fx %6s\n", n, n,
                ts, tp, ts / tp, eq ? "yes" : "NO");
  }

  for (std::size_t n : {16u, 32u, 64u}) {
    const ComplexMatrix a = random_matrix(n, n, rng);
    const ComplexMatrix b = random_matrix(n, n, rng);
    ComplexMatrix rs(1, 1), rp(1, 1);
    const double ts = time_ms([&] { rs = zxforge::ref::kron(a, b); }, 5);
    const double tp = time_ms([&] { rp = zxforge::par::kron(a, b); }, 5);
    const bool eq = bit_identical(rs, rp);
    all_equal = all_equal && eq;
    std::printf("kron   %4zux%-4zu              %12.3f %12.3f %8.2fx %6s\n", n, n,
                ts, tp, ts / tp, eq ? "yes" : "NO");
  }

  for (int q : {8, 9, 10}) {
    const std::size_t dim = std::size_t{1} << q;
    const ComplexMatrix u = random_matrix(4, 4, rng);
    const ComplexMatrix m = random_matrix(dim, dim, rng);
    ComplexMatrix rs(1, 1), rp(1, 1);
    const std::vector<int> targets{0, q - 1};
    const double ts =
        time_ms([&] { rs = zxforge::ref::apply_gate(u, q, targets, m); }, 3);
    const double tp =
        time_ms([&] { rp = zxforge::par::apply_gate(u, q, targets, m); }, 3);
    const bool eq = bit_identical(rs, rp);
    all_equal = all_equal && eq;
    std::printf("apply_gate %2d qubits          %12.3f %12.3f %8.2fx %6s\n", q, ts,
                tp, ts / tp, eq ? "yes" : "NO");
  }

  if (!all_equal) {
    std::printf("FAIL: serial and OpenMP kernels disagree\n");
    return 1;
  }
  std::printf("all kernel pairs bit-identical\n");
  return 0;
}
