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
// Information geometry of parametrized probability distributions and quantum
// states: Fisher information, Shannon entropy, the KL/Fisher quadratic
// expansion, symmetric logarithmic derivatives, quantum Fisher information,
// the quantum geometric tensor and the Fubini-Study metric.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zxforge/complex_matrix.hpp"
#include "zxforge/state.hpp"

namespace zxforge {

// ---------------------------------------------------------------------------
// Parametrized families. Derivative callbacks are optional; when absent,
// derivatives are taken by central finite differences with step fd_step.
// ---------------------------------------------------------------------------

// theta in R^{n_params} -> probability vector of length n_outcomes.
struct ProbFamily {
  int n_params = 0;
  int n_outcomes = 0;
  std::function<std::vector<double>(const std::vector<double>&)> p;
  // Optional analytic Jacobian; element [k][i] = d p_k / d theta_i.
  std::function<std::vector<std::vector<double>>(const std::vector<double>&)>
      jacobian;
  double fd_step = 1e-5;
};

// theta in R^{n_params} -> vector in C^m. The vector is not assumed to be
// normalized (the quantum geometric tensor divides norms out), and m does
// not have to be a power of two.
struct StateFamily {
  int n_params = 0;
  std::function<std::vector<cplx>(const std::vector<double>&)> psi;
  // Optional analytic derivatives; element [i] = d psi / d theta_i.
  std::function<std::vector<std::vector<cplx>>(const std::vector<double>&)>
      derivatives;
  double fd_step = 1e-5;
};

// Scalar theta -> density operator.
struct DensityFamily {
  std::function<DensityOperator(double)> rho;
  // Optional analytic derivative of the density matrix.
  std::function<ComplexMatrix(double)> derivative;
  double fd_step = 1e-5;
};

// ---------------------------------------------------------------------------
// Classical quantities.
// ---------------------------------------------------------------------------

// Jacobian dp_k/dtheta_i, analytic when the family provides one, otherwise
// by central differences. Element [k][i].
std::vector<std::vector<double>> prob_jacobian(const ProbFamily& f,
                                               const std::vector<double>& theta);

// Fisher information matrix F_ij = sum_k (d_i p_k)(d_j p_k) / p_k, a real
// symmetric n_params x n_params matrix (returned with zero imaginary parts).
// Throws DegenerateSupport if any p_k <= SUPPORT_TOL, BadProbabilities if p
// is not a probability vector.
ComplexMatrix fisher_matrix(const ProbFamily& f, const std::vector<double>& theta);

// Shannon entropy -sum_k p_k log p_k in nats, with 0 log 0 := 0.
// Throws BadProbabilities if p is not a probability vector.
double shannon_entropy(const std::vector<double>& p);

// KL divergence sum_k p_k log(p_k / q_k) in nats. Terms with p_k = 0
// contribute zero; a positive p_k over zero q_k throws DegenerateSupport.
double kl_divergence(const std::vector<double>& p, const std::vector<double>& q);

// KL(p(theta + delta w) || p(theta)) agrees with the Fisher quadratic form
// (1/2) delta^2 w^T F w up to third order in delta. The check evaluates both
// at a ladder of step sizes and fits the log-log slope of the residual; an
// exact quadratic expansion shows a slope of ~3.
inline constexpr double KL_SLOPE_MIN = 2.7;

struct KlSample {
  double delta = 0;      // step size along the direction
  double kl = 0;         // KL(p(theta + delta w) || p(theta))
  double quadratic = 0;  // (1/2) delta^2 w^T F w
  double residual = 0;   // |kl - quadratic|
};

struct KlReport {
  std::vector<KlSample> samples;
  double slope = 0;   // least-squares slope of log residual vs log delta
  bool pass = false;  // slope >= KL_SLOPE_MIN
};

// deltas defaults to six log-spaced steps from 1e-2 down to 1e-3.
KlReport kl_quadratic_check(const ProbFamily& f, const std::vector<double>& theta,
                            const std::vector<double>& direction,
                            std::vector<double> deltas = {});

// ---------------------------------------------------------------------------
// Quantum quantities.
// ---------------------------------------------------------------------------

// d rho / d theta, analytic when the family provides it, otherwise central
// differences of the density matrix.
ComplexMatrix density_derivative(const DensityFamily& f, double theta);

// Symmetric logarithmic derivative, solved in the eigenbasis of rho:
// L_ij = 2 (d rho)_ij / (p_i + p_j) where p_i + p_j > SUPPORT_TOL and 0
// otherwise, transformed back to the original basis. L is Hermitian and
// satisfies d rho = (L rho + rho L)/2 on the support of rho; the kernel
// block of d rho cannot be represented and shows up in residual_full.
struct SldResult {
  ComplexMatrix l{1, 1};        // the SLD in the original basis
  double residual_support = 0;  // defect of the defining relation on support
  double residual_full = 0;     // defect over all matrix entries
};

SldResult sld(const DensityFamily& f, double theta);

// Quantum Fisher information.
//   Trace:    tr[rho L^2]                       (authoritative)
//   EigenSum: sum_{k in supp} p_k (L^2)_kk      in the eigenbasis of rho
//   Spectral: sum_{i in supp} (d p_i)^2 / p_i
//             + sum_{i in supp, j != i} 4 p_i |<i| d rho |j>|^2 / (p_i+p_j)^2
// The spectral form uses |<i| d rho |j>|^2 = (p_i - p_j)^2 |<i | d j>|^2,
// which avoids differentiating eigenvectors; it agrees with the others for
// non-degenerate full-rank families and its deviation is worth inspecting
// rather than assuming.
enum class QfiMethod { Trace, EigenSum, Spectral };

struct QfiReport {
  double trace = 0;
  double eigen_sum = 0;
  double spectral = 0;
  double sld_residual = 0;  // support-block residual of the SLD relation
};

QfiReport qfi_report(const DensityFamily& f, double theta);
double qfi(const DensityFamily& f, double theta, QfiMethod method = QfiMethod::Trace);

// Quantum geometric tensor of a state family,
//   Q_ij = <d_i psi | d_j psi> / <psi|psi>
//        - <d_i psi | psi> <psi | d_j psi> / <psi|psi>^2,
// a Hermitian n_params x n_params matrix, invariant under smooth rescalings
// psi -> lambda(theta) psi. Throws ZeroState when <psi|psi> <= 1e-12.
ComplexMatrix qgt(const StateFamily& f, const std::vector<double>& theta);

// Fubini-Study metric on CP^n in the affine chart psi = (1, z_1, ..., z_n):
//   g_ij = [(1 + |z|^2) delta_ij - conj(z_i) z_j] / (1 + |z|^2)^2.
ComplexMatrix fubini_study(const std::vector<cplx>& z);

// The same metric recovered from the real-parameter quantum geometric tensor
// of the chart family: with theta = (x_1..x_n, y_1..y_n), z_k = x_k + i y_k,
//   g_ij = conj( (Q_{x_i x_j} + Q_{y_i y_j} - i (Q_{x_i y_j} - Q_{y_i x_j})) / 4 ).
// (The conjugate converts between the two Hermitian index conventions.)
ComplexMatrix qgt_chart_pullback(const std::vector<cplx>& z);

// Kahler potential K = log(1 + |z|^2) and its mixed second derivatives
//   d^2 K / dz_i dconj(z_j)
// by second-order central differences in the underlying real coordinates,
// which reproduce the Fubini-Study metric.
double kahler_potential(const std::vector<cplx>& z);
ComplexMatrix kahler_metric_fd(const std::vector<cplx>& z, double h = 1e-4);

// ---------------------------------------------------------------------------
// Built-in families.
// ---------------------------------------------------------------------------

// p(theta) = (theta, 1 - theta) on one parameter, analytic Jacobian.
ProbFamily bernoulli_family();

// p_k proportional to exp((W theta)_k); weights is n_outcomes x n_params.
// Analytic Jacobian dp_k/dtheta_i = p_k (W_ki - sum_l p_l W_li).
ProbFamily softmax_family(std::vector<std::vector<double>> weights);

// psi(theta) = (cos(theta/2), sin(theta/2)), analytic derivative.
StateFamily bloch_theta_family();

// The pure density operator of bloch_theta_family.
DensityFamily bloch_theta_density();

// rho(theta) = diag(theta, 1 - theta), analytic derivative; valid for
// theta in (0, 1).
DensityFamily diag_qubit_family();

// The affine chart psi(theta) = (1, z) with theta = (x_1..x_n, y_1..y_n),
// analytic derivatives.
StateFamily chart_family(int n);

}  // namespace zxforge
