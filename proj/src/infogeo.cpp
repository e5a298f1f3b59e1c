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

#include "zxforge/infogeo.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "zxforge/eigen_hermitian.hpp"
#include "zxforge/errors.hpp"
#include "zxforge/tolerances.hpp"

namespace zxforge {

namespace {

constexpr double PROB_SUM_TOL = 1e-10;

void validate_probabilities(const std::vector<double>& p, const char* what) {
  if (p.empty()) throw BadProbabilities(std::string(what) + ": empty vector");
  double sum = 0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -PROB_SUM_TOL)
      throw BadProbabilities(std::string(what) + ": entry " + std::to_string(v));
    sum += v;
  }
  if (std::abs(sum - 1.0) > PROB_SUM_TOL)
    throw BadProbabilities(std::string(what) + ": sum " + std::to_string(sum));
}

std::vector<double> eval_probs(const ProbFamily& f, const std::vector<double>& theta) {
  if (!f.p) throw ShapeError("ProbFamily has no probability callback");
  if (static_cast<int>(theta.size()) != f.n_params)
    throw DimensionMismatch("ProbFamily expects " + std::to_string(f.n_params) +
                            " parameters, got " + std::to_string(theta.size()));
  std::vector<double> p = f.p(theta);
  if (static_cast<int>(p.size()) != f.n_outcomes)
    throw DimensionMismatch("ProbFamily produced " + std::to_string(p.size()) +
                            " outcomes, expected " + std::to_string(f.n_outcomes));
  validate_probabilities(p, "probability family");
  return p;
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw DimensionMismatch("slope fit needs at least two distinct steps");
  return sxy / sxx;
}

// Shared eigen-decomposed view of (rho, d rho) used by the SLD and all
// three QFI formulas.
struct RhoDerivEigen {
  std::vector<double> p;   // eigenvalues of rho, ascending
  ComplexMatrix v{1, 1};   // eigenvector columns
  ComplexMatrix dr{1, 1};  // d rho in the eigenbasis
};

RhoDerivEigen rho_deriv_eigen(const DensityFamily& f, double theta) {
  if (!f.rho) throw ShapeError("DensityFamily has no density callback");
  const DensityOperator rho = f.rho(theta);
  const ComplexMatrix drho = density_derivative(f, theta);
  if (drho.rows() != rho.matrix().rows() || drho.cols() != rho.matrix().cols())
    throw DimensionMismatch("density derivative shape does not match rho");
  HermitianEigen eig = hermitian_eigen(rho.matrix());
  RhoDerivEigen out;
  out.p = std::move(eig.values);
  out.v = std::move(eig.vectors);
  out.dr = out.v.dagger() * drho * out.v;
  return out;
}

// SLD in the eigenbasis of rho: 2 dr_ij / (p_i + p_j) on the support block.
ComplexMatrix sld_eigenbasis(const RhoDerivEigen& e) {
  const std::size_t d = e.p.size();
  ComplexMatrix l(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double denom = e.p[i] + e.p[j];
      l(i, j) = denom > SUPPORT_TOL ? 2.0 * e.dr(i, j) / denom : cplx{0, 0};
    }
  return l;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classical quantities.
// ---------------------------------------------------------------------------

std::vector<std::vector<double>> prob_jacobian(const ProbFamily& f,
                                               const std::vector<double>& theta) {
  if (f.jacobian) {
    auto jac = f.jacobian(theta);
    if (static_cast<int>(jac.size()) != f.n_outcomes)
      throw DimensionMismatch("analytic Jacobian has wrong number of rows");
    for (const auto& row : jac)
      if (static_cast<int>(row.size()) != f.n_params)
        throw DimensionMismatch("analytic Jacobian has wrong number of columns");
    return jac;
  }
  if (!f.p) throw ShapeError("ProbFamily has no probability callback");
  const double h = f.fd_step;
  std::vector<std::vector<double>> jac(
      f.n_outcomes, std::vector<double>(f.n_params, 0.0));
  for (int i = 0; i < f.n_params; ++i) {
    std::vector<double> up = theta, dn = theta;
    up[i] += h;
    dn[i] -= h;
    const std::vector<double> pu = f.p(up);
    const std::vector<double> pd = f.p(dn);
    if (static_cast<int>(pu.size()) != f.n_outcomes ||
        static_cast<int>(pd.size()) != f.n_outcomes)
      throw DimensionMismatch("probability callback changed its outcome count");
    for (int k = 0; k < f.n_outcomes; ++k)
      jac[k][i] = (pu[k] - pd[k]) / (2 * h);
  }
  return jac;
}

ComplexMatrix fisher_matrix(const ProbFamily& f, const std::vector<double>& theta) {
  const std::vector<double> p = eval_probs(f, theta);
  for (int k = 0; k < f.n_outcomes; ++k)
    if (p[k] <= SUPPORT_TOL)
      throw DegenerateSupport("fisher_matrix: outcome " + std::to_string(k) +
                              " has probability " + std::to_string(p[k]));
  const auto jac = prob_jacobian(f, theta);
  ComplexMatrix fisher(f.n_params, f.n_params);
  for (int i = 0; i < f.n_params; ++i)
    for (int j = 0; j < f.n_params; ++j) {
      double sum = 0;
      for (int k = 0; k < f.n_outcomes; ++k) sum += jac[k][i] * jac[k][j] / p[k];
      fisher(i, j) = sum;
    }
  return fisher;
}

double shannon_entropy(const std::vector<double>& p) {
  validate_probabilities(p, "shannon_entropy");
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

double kl_divergence(const std::vector<double>& p, const std::vector<double>& q) {
  validate_probabilities(p, "kl_divergence (first argument)");
  validate_probabilities(q, "kl_divergence (second argument)");
  if (p.size() != q.size())
    throw DimensionMismatch("kl_divergence: vectors of different length");
  double kl = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) continue;
    if (q[k] <= 0)
      throw DegenerateSupport("kl_divergence: q has zero mass where p does not");
    kl += p[k] * std::log(p[k] / q[k]);
  }
  return kl;
}

KlReport kl_quadratic_check(const ProbFamily& f, const std::vector<double>& theta,
                            const std::vector<double>& direction,
                            std::vector<double> deltas) {
  if (static_cast<int>(direction.size()) != f.n_params)
    throw DimensionMismatch("direction length does not match parameter count");
  if (deltas.empty())
    for (int k = 0; k < 6; ++k) deltas.push_back(std::pow(10.0, -2.0 - 0.2 * k));

  const ComplexMatrix fisher = fisher_matrix(f, theta);
  double wfw = 0;
  for (int i = 0; i < f.n_params; ++i)
    for (int j = 0; j < f.n_params; ++j)
      wfw += direction[i] * fisher(i, j).real() * direction[j];

  const std::vector<double> p0 = eval_probs(f, theta);
  KlReport report;
  std::vector<double> logd, logr;
  for (double delta : deltas) {
    std::vector<double> shifted = theta;
    for (int i = 0; i < f.n_params; ++i) shifted[i] += delta * direction[i];
    const std::vector<double> p1 = eval_probs(f, shifted);
    KlSample s;
    s.delta = delta;
    s.kl = kl_divergence(p1, p0);
    s.quadratic = 0.5 * delta * delta * wfw;
    s.residual = std::abs(s.kl - s.quadratic);
    report.samples.push_back(s);
    logd.push_back(std::log(delta));
    logr.push_back(std::log(std::max(s.residual, 1e-300)));
  }
  report.slope = fit_slope(logd, logr);
  report.pass = report.slope >= KL_SLOPE_MIN;
  return report;
}

// ---------------------------------------------------------------------------
// Quantum quantities.
// ---------------------------------------------------------------------------

ComplexMatrix density_derivative(const DensityFamily& f, double theta) {
  if (f.derivative) return f.derivative(theta);
  if (!f.rho) throw ShapeError("DensityFamily has no density callback");
  const double h = f.fd_step;
  const ComplexMatrix up = f.rho(theta + h).matrix();
  const ComplexMatrix dn = f.rho(theta - h).matrix();
  return (up - dn) * cplx{1.0 / (2 * h), 0};
}

SldResult sld(const DensityFamily& f, double theta) {
  const RhoDerivEigen e = rho_deriv_eigen(f, theta);
  const std::size_t d = e.p.size();
  const ComplexMatrix le = sld_eigenbasis(e);

  // Defect of d rho = (L rho + rho L)/2 in the eigenbasis, where rho is
  // diagonal: the anticommutator entry is L_ij (p_i + p_j) / 2.
  SldResult out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double denom = e.p[i] + e.p[j];
      const double defect = std::abs(e.dr(i, j) - 0.5 * denom * le(i, j));
      out.residual_full = std::max(out.residual_full, defect);
      if (denom > SUPPORT_TOL)
        out.residual_support = std::max(out.residual_support, defect);
    }
  out.l = e.v * le * e.v.dagger();
  return out;
}

QfiReport qfi_report(const DensityFamily& f, double theta) {
  const RhoDerivEigen e = rho_deriv_eigen(f, theta);
  const std::size_t d = e.p.size();
  const ComplexMatrix le = sld_eigenbasis(e);

  QfiReport rep;
  // tr[rho L^2] with rho diagonal in this basis.
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l)
      rep.trace += e.p[k] * std::norm(le(k, l));
  // Same sum, but restricted to eigenvalues inside the support.
  for (std::size_t k = 0; k < d; ++k) {
    if (e.p[k] <= SUPPORT_TOL) continue;
    for (std::size_t l = 0; l < d; ++l) rep.eigen_sum += e.p[k] * std::norm(le(k, l));
  }
  // Spectral decomposition: the classical part over eigenvalue derivatives
  // plus the eigenvector part, with (p_i - p_j)^2 |<i|d j>|^2 = |<i|d rho|j>|^2.
  for (std::size_t i = 0; i < d; ++i) {
    if (e.p[i] <= SUPPORT_TOL) continue;
    rep.spectral += e.dr(i, i).real() * e.dr(i, i).real() / e.p[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      const double denom = e.p[i] + e.p[j];
      if (denom <= SUPPORT_TOL) continue;
      rep.spectral += 4.0 * e.p[i] * std::norm(e.dr(i, j)) / (denom * denom);
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double denom = e.p[i] + e.p[j];
      if (denom <= SUPPORT_TOL) continue;
      const double defect = std::abs(e.dr(i, j) - 0.5 * denom * le(i, j));
      rep.sld_residual = std::max(rep.sld_residual, defect);
    }
  return rep;
}

double qfi(const DensityFamily& f, double theta, QfiMethod method) {
  const QfiReport rep = qfi_report(f, theta);
  switch (method) {
    case QfiMethod::Trace: return rep.trace;
    case QfiMethod::EigenSum: return rep.eigen_sum;
    case QfiMethod::Spectral: return rep.spectral;
  }
  throw ShapeError("unknown QFI method");
}

ComplexMatrix qgt(const StateFamily& f, const std::vector<double>& theta) {
  if (!f.psi) throw ShapeError("StateFamily has no state callback");
  if (static_cast<int>(theta.size()) != f.n_params)
    throw DimensionMismatch("StateFamily expects " + std::to_string(f.n_params) +
                            " parameters, got " + std::to_string(theta.size()));
  const std::vector<cplx> psi = f.psi(theta);
  const std::size_t m = psi.size();

  double norm2 = 0;
  for (const cplx& a : psi) norm2 += std::norm(a);
  if (norm2 <= 1e-12) throw ZeroState("qgt: state vector has (near-)zero norm");

  std::vector<std::vector<cplx>> dpsi;
  if (f.derivatives) {
    dpsi = f.derivatives(theta);
    if (static_cast<int>(dpsi.size()) != f.n_params)
      throw DimensionMismatch("analytic state derivatives have wrong count");
    for (const auto& dv : dpsi)
      if (dv.size() != m) throw DimensionMismatch("state derivative has wrong length");
  } else {
    const double h = f.fd_step;
    dpsi.resize(f.n_params);
    for (int i = 0; i < f.n_params; ++i) {
      std::vector<double> up = theta, dn = theta;
      up[i] += h;
      dn[i] -= h;
      const std::vector<cplx> pu = f.psi(up);
      const std::vector<cplx> pd = f.psi(dn);
      if (pu.size() != m || pd.size() != m)
        throw DimensionMismatch("state callback changed its dimension");
      dpsi[i].resize(m);
      for (std::size_t k = 0; k < m; ++k) dpsi[i][k] = (pu[k] - pd[k]) / (2 * h);
    }
  }

  const auto inner = [m](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s{0, 0};
    for (std::size_t k = 0; k < m; ++k) s += std::conj(a[k]) * b[k];
    return s;
  };

  std::vector<cplx> dpsi_psi(f.n_params);  // <d_i psi | psi>
  for (int i = 0; i < f.n_params; ++i) dpsi_psi[i] = inner(dpsi[i], psi);

  ComplexMatrix q(f.n_params, f.n_params);
  for (int i = 0; i < f.n_params; ++i)
    for (int j = 0; j < f.n_params; ++j)
      q(i, j) = inner(dpsi[i], dpsi[j]) / norm2 -
                dpsi_psi[i] * std::conj(dpsi_psi[j]) / (norm2 * norm2);
  return q;
}

ComplexMatrix fubini_study(const std::vector<cplx>& z) {
  const int n = static_cast<int>(z.size());
  double z2 = 0;
  for (const cplx& v : z) z2 += std::norm(v);
  const double denom = (1 + z2) * (1 + z2);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx num = -std::conj(z[i]) * z[j];
      if (i == j) num += 1 + z2;
      g(i, j) = num / denom;
    }
  return g;
}

ComplexMatrix qgt_chart_pullback(const std::vector<cplx>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<double> theta(2 * n);
  for (int k = 0; k < n; ++k) {
    theta[k] = z[k].real();
    theta[n + k] = z[k].imag();
  }
  const ComplexMatrix q = qgt(chart_family(n), theta);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx hol = 0.25 * (q(i, j) + q(n + i, n + j) -
                               cplx{0, 1} * (q(i, n + j) - q(n + i, j)));
      g(i, j) = std::conj(hol);
    }
  return g;
}

double kahler_potential(const std::vector<cplx>& z) {
  double z2 = 0;
  for (const cplx& v : z) z2 += std::norm(v);
  return std::log(1 + z2);
}

ComplexMatrix kahler_metric_fd(const std::vector<cplx>& z, double h) {
  const int n = static_cast<int>(z.size());
  const auto k_at = [&z, n](int coord, double da, int coord2, double db) {
    std::vector<cplx> w = z;
    const auto bump = [&w, n](int c, double d) {
      if (c < n)
        w[c] += d;  // real part
      else
        w[c - n] += cplx{0, d};  // imaginary part
    };
    bump(coord, da);
    if (coord2 >= 0) bump(coord2, db);
    return kahler_potential(w);
  };
  // Second-order central differences of K over the real coordinates
  // (x_1..x_n, y_1..y_n), indexed 0..2n-1.
  const auto second = [&](int a, int b) {
    if (a == b) {
      return (k_at(a, h, -1, 0) - 2 * kahler_potential(z) + k_at(a, -h, -1, 0)) /
             (h * h);
    }
    return (k_at(a, h, b, h) - k_at(a, h, b, -h) - k_at(a, -h, b, h) +
            k_at(a, -h, b, -h)) /
           (4 * h * h);
  };
  // d^2 K / dz_i dconj(z_j)
  //   = (K_{x_i x_j} + K_{y_i y_j} + i (K_{x_i y_j} - K_{y_i x_j})) / 4.
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double xx = second(i, j);
      const double yy = second(n + i, n + j);
      const double xy = second(i, n + j);
      const double yx = second(n + i, j);
      g(i, j) = 0.25 * cplx{xx + yy, xy - yx};
    }
  return g;
}

// ---------------------------------------------------------------------------
// Built-in families.
// ---------------------------------------------------------------------------

ProbFamily bernoulli_family() {
  ProbFamily f;
  f.n_params = 1;
  f.n_outcomes = 2;
  f.p = [](const std::vector<double>& t) {
    return std::vector<double>{t[0], 1 - t[0]};
  };
  f.jacobian = [](const std::vector<double>&) {
    return std::vector<std::vector<double>>{{1.0}, {-1.0}};
  };
  return f;
}

ProbFamily softmax_family(std::vector<std::vector<double>> weights) {
  if (weights.empty() || weights[0].empty())
    throw ShapeError("softmax_family: empty weight matrix");
  const int n = static_cast<int>(weights.size());
  const int d = static_cast<int>(weights[0].size());
  for (const auto& row : weights)
    if (static_cast<int>(row.size()) != d)
      throw ShapeError("softmax_family: ragged weight matrix");

  const auto probs = [weights, n, d](const std::vector<double>& t) {
    std::vector<double> logits(n, 0.0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < d; ++i) logits[k] += weights[k][i] * t[i];
    const double top = *std::max_element(logits.begin(), logits.end());
    std::vector<double> p(n);
    double sum = 0;
    for (int k = 0; k < n; ++k) {
      p[k] = std::exp(logits[k] - top);
      sum += p[k];
    }
    for (double& v : p) v /= sum;
    return p;
  };

  ProbFamily f;
  f.n_params = d;
  f.n_outcomes = n;
  f.p = probs;
  f.jacobian = [weights, probs, n, d](const std::vector<double>& t) {
    const std::vector<double> p = probs(t);
    std::vector<double> mean(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < n; ++k) mean[i] += p[k] * weights[k][i];
    std::vector<std::vector<double>> jac(n, std::vector<double>(d));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < d; ++i) jac[k][i] = p[k] * (weights[k][i] - mean[i]);
    return jac;
  };
  return f;
}

StateFamily bloch_theta_family() {
  StateFamily f;
  f.n_params = 1;
  f.psi = [](const std::vector<double>& t) {
    return std::vector<cplx>{std::cos(t[0] / 2), std::sin(t[0] / 2)};
  };
  f.derivatives = [](const std::vector<double>& t) {
    return std::vector<std::vector<cplx>>{
        {-0.5 * std::sin(t[0] / 2), 0.5 * std::cos(t[0] / 2)}};
  };
  return f;
}

DensityFamily bloch_theta_density() {
  DensityFamily f;
  f.rho = [](double t) {
    return density_from_pure(bloch_to_state(t, 0.0));
  };
  return f;
}

DensityFamily diag_qubit_family() {
  DensityFamily f;
  f.rho = [](double t) {
    ComplexMatrix m(2, 2);
    m(0, 0) = t;
    m(1, 1) = 1 - t;
    return DensityOperator(1, m);
  };
  f.derivative = [](double) {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return m;
  };
  return f;
}

StateFamily chart_family(int n) {
  if (n < 1) throw ShapeError("chart_family needs at least one complex coordinate");
  StateFamily f;
  f.n_params = 2 * n;
  f.psi = [n](const std::vector<double>& t) {
    std::vector<cplx> psi(n + 1);
    psi[0] = 1;
    for (int k = 0; k < n; ++k) psi[k + 1] = cplx{t[k], t[n + k]};
    return psi;
  };
  f.derivatives = [n](const std::vector<double>&) {
    std::vector<std::vector<cplx>> d(2 * n, std::vector<cplx>(n + 1, cplx{0, 0}));
    for (int k = 0; k < n; ++k) {
      d[k][k + 1] = 1;
      d[n + k][k + 1] = cplx{0, 1};
    }
    return d;
  };
  return f;
}

}  // namespace zxforge
