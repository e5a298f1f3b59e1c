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

#include "zxforge/kernels.hpp"

#include <cstdint>

#include "zxforge/tolerances.hpp"

namespace zxforge {

namespace {

void require_mul_shapes(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: inner dimensions disagree");
}

// Bit positions (0 = least significant) of the gate's qubits inside a row
// index of the full 2^n space. targets[0] is the gate's most significant
// qubit; qubit q of the circuit is bit (n-1-q) of the index.
std::vector<int> target_bit_positions(int n_qubits,
                                      const std::vector<int>& targets) {
  std::vector<int> pos;
  pos.reserve(targets.size());
  for (int t : targets) {
    if (t < 0 || t >= n_qubits)
      throw IndexOutOfRange("gate target qubit out of range");
    pos.push_back(n_qubits - 1 - t);
  }
  return pos;
}

// Scatters gate-local index g (targets[0] = MSB of g) onto the full index.
inline std::uint64_t spread_bits(std::uint64_t g,
                                 const std::vector<int>& bitpos) {
  std::uint64_t out = 0;
  const std::size_t k = bitpos.size();
  for (std::size_t i = 0; i < k; ++i)
    out |= ((g >> (k - 1 - i)) & 1ULL) << bitpos[i];
  return out;
}

// Shared element kernel so the serial and OpenMP flavours sum in the same
// order and produce bit-identical results.
inline void apply_gate_column(const ComplexMatrix& u,
                              const std::vector<int>& bitpos,
                              const std::vector<std::uint64_t>& offsets,
                              std::uint64_t dim, const ComplexMatrix& in,
                              ComplexMatrix& out, std::uint64_t col) {
  const std::uint64_t span = offsets.size();
  std::uint64_t target_mask = 0;
  for (int p : bitpos) target_mask |= 1ULL << p;
  std::vector<cplx> scratch(span);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (std::uint64_t g = 0; g < span; ++g)
      scratch[g] = in(base | offsets[g], col);
    for (std::uint64_t g = 0; g < span; ++g) {
      cplx acc = 0.0;
      for (std::uint64_t h = 0; h < span; ++h) acc += u(g, h) * scratch[h];
      out(base | offsets[g], col) = acc;
    }
  }
}

std::vector<std::uint64_t> gate_offsets(const std::vector<int>& bitpos) {
  const std::uint64_t span = 1ULL << bitpos.size();
  std::vector<std::uint64_t> offsets(span);
  for (std::uint64_t g = 0; g < span; ++g) offsets[g] = spread_bits(g, bitpos);
  return offsets;
}

void check_gate_shapes(const ComplexMatrix& u, int n_qubits,
                       const std::vector<int>& targets, std::size_t dim) {
  const std::uint64_t span = 1ULL << targets.size();
  if (u.rows() != span || u.cols() != span)
    throw DimensionMismatch("gate matrix does not match target count");
  if (dim != (1ULL << n_qubits))
    throw DimensionMismatch("operand dimension is not 2^n_qubits");
  if (n_qubits > MAX_QUBITS) throw TooLarge("more than MAX_QUBITS qubits");
}

}  // namespace

namespace ref {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_mul_shapes(a, b);
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  ComplexMatrix bt = b.transpose();
  ComplexMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      cplx acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += a(i, l) * bt(j, l);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t ra = a.rows(), ca = a.cols();
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t k = 0; k < rb; ++k)
      for (std::size_t j = 0; j < ca; ++j)
        for (std::size_t l = 0; l < cb; ++l)
          out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix apply_gate(const ComplexMatrix& u, int n_qubits,
                         const std::vector<int>& targets,
                         const ComplexMatrix& m) {
  check_gate_shapes(u, n_qubits, targets, m.rows());
  std::vector<int> bitpos = target_bit_positions(n_qubits, targets);
  std::vector<std::uint64_t> offsets = gate_offsets(bitpos);
  const std::uint64_t dim = m.rows();
  ComplexMatrix out(m.rows(), m.cols());
  for (std::uint64_t col = 0; col < m.cols(); ++col)
    apply_gate_column(u, bitpos, offsets, dim, m, out, col);
  return out;
}

std::vector<cplx> apply_gate_state(const ComplexMatrix& u, int n_qubits,
                                   const std::vector<int>& targets,
                                   const std::vector<cplx>& state) {
  check_gate_shapes(u, n_qubits, targets, state.size());
  std::vector<int> bitpos = target_bit_positions(n_qubits, targets);
  std::vector<std::uint64_t> offsets = gate_offsets(bitpos);
  const std::uint64_t span = offsets.size();
  std::uint64_t target_mask = 0;
  for (int p : bitpos) target_mask |= 1ULL << p;
  std::vector<cplx> out(state.size());
  std::vector<cplx> scratch(span);
  for (std::uint64_t base = 0; base < state.size(); ++base) {
    if (base & target_mask) continue;
    for (std::uint64_t g = 0; g < span; ++g)
      scratch[g] = state[base | offsets[g]];
    for (std::uint64_t g = 0; g < span; ++g) {
      cplx acc = 0.0;
      for (std::uint64_t h = 0; h < span; ++h) acc += u(g, h) * scratch[h];
      out[base | offsets[g]] = acc;
    }
  }
  return out;
}

}  // namespace ref

namespace par {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_mul_shapes(a, b);
  const std::int64_t n = a.rows(), k = a.cols(), m = b.cols();
  ComplexMatrix bt = b.transpose();
  ComplexMatrix out(n, m);
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      cplx acc = 0.0;
      for (std::int64_t l = 0; l < k; ++l) acc += a(i, l) * bt(j, l);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::int64_t ra = a.rows(), ca = a.cols();
  const std::int64_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < ra; ++i)
    for (std::int64_t k = 0; k < rb; ++k)
      for (std::int64_t j = 0; j < ca; ++j)
        for (std::int64_t l = 0; l < cb; ++l)
          out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix apply_gate(const ComplexMatrix& u, int n_qubits,
                         const std::vector<int>& targets,
                         const ComplexMatrix& m) {
  check_gate_shapes(u, n_qubits, targets, m.rows());
  std::vector<int> bitpos = target_bit_positions(n_qubits, targets);
  std::vector<std::uint64_t> offsets = gate_offsets(bitpos);
  const std::uint64_t dim = m.rows();
  ComplexMatrix out(m.rows(), m.cols());
  const std::int64_t ncols = m.cols();
#pragma omp parallel for schedule(static)
  for (std::int64_t col = 0; col < ncols; ++col)
    apply_gate_column(u, bitpos, offsets, dim, m, out, col);
  return out;
}

}  // namespace par

// Dispatch: small operands go through the serial kernels, anything bigger
// through OpenMP. Either path gives bit-identical results.
namespace {
constexpr std::size_t PAR_THRESHOLD = 64 * 64;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (rows_ * o.cols() >= PAR_THRESHOLD) return par::matmul(*this, o);
  return ref::matmul(*this, o);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() * b.size() >= PAR_THRESHOLD) return par::kron(a, b);
  return ref::kron(a, b);
}

}  // namespace zxforge
