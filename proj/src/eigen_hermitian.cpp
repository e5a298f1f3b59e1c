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

#include "zxforge/eigen_hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zxforge/tolerances.hpp"

namespace zxforge {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw ShapeError("hermitian_eigen: matrix must be square");
  if (!a.is_hermitian(1e-10))
    throw NotHermitian("hermitian_eigen: matrix is not Hermitian");

  const std::size_t n = a.rows();
  ComplexMatrix w = a;
  // Symmetrize exactly so rounding in the input cannot bias the sweeps.
  for (std::size_t p = 0; p < n; ++p) {
    w(p, p) = cplx(w(p, p).real(), 0.0);
    for (std::size_t q = p + 1; q < n; ++q) {
      cplx avg = 0.5 * (w(p, q) + std::conj(w(q, p)));
      w(p, q) = avg;
      w(q, p) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(w.max_abs(), 1e-300);
  const double stop = 1e-15 * scale * static_cast<double>(n);
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps && offdiag_norm(w) > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = w(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-18 * scale) continue;

        // Unitary plane rotation R = [[c, -s*e^{i phi}], [s*e^{-i phi}, c]]
        // with phi = arg(apq), chosen to zero the (p,q) element.
        const cplx phase = apq / mag;
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        const double tau = (app - aqq) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx wkp = w(k, p);
          const cplx wkq = w(k, q);
          w(k, p) = c * wkp + s * std::conj(phase) * wkq;
          w(k, q) = -s * phase * wkp + c * wkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx wpk = w(p, k);
          const cplx wqk = w(q, k);
          w(p, k) = c * wpk + s * phase * wqk;
          w(q, k) = -s * std::conj(phase) * wpk + c * wqk;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        w(p, p) = cplx(w(p, p).real(), 0.0);
        w(q, q) = cplx(w(q, q).real(), 0.0);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v(k, q) = -s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return w(i, i).real() < w(j, j).real();
  });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = w(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace zxforge
