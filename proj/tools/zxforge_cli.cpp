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
// zxforge command line tool.
//
//   zxforge simulate    <file.qc> [--input-state BITS]
//   zxforge to-zx       <file.qc>
//   zxforge simplify    <file.qc | file.zx.json>
//   zxforge verify-equiv <a> <b> [--up-to-phase]
//   zxforge verify-hopf  <zx | cyclic> [n]
//   zxforge infogeo     <fisher|qfi|qgt|fs> <family> [values...]
//
// Exit codes: 0 success, 2 parse/usage error, 3 size cap exceeded,
// 4 verification failure, 5 step limit exceeded.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "zxforge/circuit_io.hpp"
#include "zxforge/circuit_to_zx.hpp"
#include "zxforge/errors.hpp"
#include "zxforge/gate.hpp"
#include "zxforge/hopf.hpp"
#include "zxforge/infogeo.hpp"
#include "zxforge/state.hpp"
#include "zxforge/tolerances.hpp"
#include "zxforge/zx_diagram.hpp"
#include "zxforge/zx_eval.hpp"
#include "zxforge/zx_io.hpp"
#include "zxforge/zx_rules.hpp"
#include "zxforge/zx_simplify.hpp"

namespace {

using json = nlohmann::ordered_json;
using zxforge::cplx;
using zxforge::ComplexMatrix;

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_TOO_LARGE = 3;
constexpr int EXIT_VERIFY = 4;
constexpr int EXIT_STEP_LIMIT = 5;

// All numeric CLI output is rounded to 12 significant digits so golden
// files stay stable across platforms.
double sig12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

json complex_json(cplx v) {
  return json{{"re", sig12(v.real())}, {"im", sig12(v.imag())}};
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json real_matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(sig12(m(r, c).real()));
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zxforge::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Circuits are .qc files, diagrams .zx.json; anything else is rejected.
zxforge::zx::ZxDiagram load_diagram(const std::string& path) {
  if (ends_with(path, ".qc"))
    return zxforge::zx::circuit_to_zx(zxforge::circ::parse_circuit(read_file(path)));
  if (ends_with(path, ".zx.json")) return zxforge::zx::import_json(read_file(path));
  throw zxforge::ParseError("unrecognized input extension (want .qc or .zx.json): " +
                            path);
}

struct Options {
  std::string format = "json";
  double tol = zxforge::EQ_TOL;
  std::size_t step_limit = 0;
  std::uint64_t seed = 0;  // reserved for randomized suites
};

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int cmd_simulate(const std::string& path, const std::string& input_state,
                 const Options& opt) {
  const zxforge::circ::Circuit c = zxforge::circ::parse_circuit(read_file(path));

  if (!input_state.empty()) {
    if (static_cast<int>(input_state.size()) != c.n_qubits)
      throw zxforge::ParseError("--input-state needs exactly " +
                                std::to_string(c.n_qubits) + " bits");
    std::size_t index = 0;
    for (char b : input_state) {
      if (b != '0' && b != '1')
        throw zxforge::ParseError("--input-state must be a bitstring");
      index = index * 2 + (b - '0');
    }
    const zxforge::StateVector out =
        zxforge::circ::simulate(c, zxforge::StateVector::basis(c.n_qubits, index));
    if (opt.format == "text") {
      for (std::size_t i = 0; i < out.dim(); ++i) {
        std::string bits;
        for (int q = c.n_qubits - 1; q >= 0; --q) bits += ((i >> q) & 1) ? '1' : '0';
        std::printf("|%s>  %.12g  %.12g\n", bits.c_str(), out.amp(i).real(),
                    out.amp(i).imag());
      }
      return 0;
    }
    json j;
    j["qubits"] = c.n_qubits;
    j["input"] = input_state;
    json amps = json::array();
    for (std::size_t i = 0; i < out.dim(); ++i) amps.push_back(complex_json(out.amp(i)));
    j["amplitudes"] = amps;
    emit(j);
    return 0;
  }

  const ComplexMatrix u = zxforge::circ::circuit_unitary(c);
  if (opt.format == "text") {
    for (std::size_t r = 0; r < u.rows(); ++r) {
      for (std::size_t c2 = 0; c2 < u.cols(); ++c2)
        std::printf("%s(%.12g%+.12gi)", c2 ? "  " : "", u(r, c2).real(),
                    u(r, c2).imag());
      std::printf("\n");
    }
    return 0;
  }
  json j;
  j["qubits"] = c.n_qubits;
  j["unitary"] = matrix_json(u);
  emit(j);
  return 0;
}

// ---------------------------------------------------------------------------
// to-zx
// ---------------------------------------------------------------------------

int cmd_to_zx(const std::string& path, const Options& opt) {
  if (!ends_with(path, ".qc"))
    throw zxforge::ParseError("to-zx expects a .qc circuit file");
  const zxforge::zx::ZxDiagram d =
      zxforge::zx::circuit_to_zx(zxforge::circ::parse_circuit(read_file(path)));
  if (opt.format == "dot")
    std::cout << zxforge::zx::export_dot(d);
  else
    std::cout << zxforge::zx::export_json(d);
  return 0;
}

// ---------------------------------------------------------------------------
// simplify
// ---------------------------------------------------------------------------

json count_json(const zxforge::zx::ZxDiagram& d) {
  return json{{"nodes", d.n_nodes()},
              {"edges", d.n_edges()},
              {"hadamards", d.h_count()}};
}

int cmd_simplify(const std::string& path, const Options& opt) {
  const zxforge::zx::ZxDiagram before = load_diagram(path);
  zxforge::zx::SimplifyConfig config;
  config.step_limit = opt.step_limit;
  const zxforge::zx::SimplifyResult result = zxforge::zx::simplify(before, config);

  std::string verdict = "unverified";
  double deviation = 0.0;
  if (zxforge::zx::evaluable(before) && zxforge::zx::evaluable(result.diagram)) {
    const zxforge::zx::EquivReport eq =
        zxforge::zx::verify_equivalence(before, result.diagram, false, opt.tol);
    verdict = eq.equivalent ? "sound" : "violation";
    deviation = eq.max_deviation;
  }

  if (opt.format == "dot") {
    std::cout << zxforge::zx::export_dot(result.diagram);
    std::cerr << "verdict: " << verdict << "\n";
  } else if (opt.format == "text") {
    std::printf("before: %zu nodes, %zu edges, %zu hadamards\n",
                static_cast<std::size_t>(before.n_nodes()),
                static_cast<std::size_t>(before.n_edges()),
                static_cast<std::size_t>(before.h_count()));
    std::printf("after:  %zu nodes, %zu edges, %zu hadamards\n",
                static_cast<std::size_t>(result.diagram.n_nodes()),
                static_cast<std::size_t>(result.diagram.n_edges()),
                static_cast<std::size_t>(result.diagram.h_count()));
    std::printf("steps:  %zu in %zu passes\n", result.steps.size(), result.passes);
    for (const auto& s : result.steps) {
      std::printf("  %s at [", zxforge::zx::rule_name(s.rule).c_str());
      for (std::size_t i = 0; i < s.site.size(); ++i)
        std::printf("%s%d", i ? " " : "", s.site[i]);
      std::printf("]\n");
    }
    std::printf("verdict: %s\n", verdict.c_str());
  } else {
    json j;
    j["before"] = count_json(before);
    j["after"] = count_json(result.diagram);
    j["passes"] = result.passes;
    j["steps"] = json::parse(zxforge::zx::step_log_json(result.steps));
    j["verdict"] = verdict;
    j["max_deviation"] = sig12(deviation);
    j["diagram"] = json::parse(zxforge::zx::export_json(result.diagram));
    emit(j);
  }
  return verdict == "violation" ? EXIT_VERIFY : 0;
}

// ---------------------------------------------------------------------------
// verify-equiv
// ---------------------------------------------------------------------------

int cmd_verify_equiv(const std::string& path_a, const std::string& path_b,
                     bool up_to_phase, const Options& opt) {
  const zxforge::zx::ZxDiagram a = load_diagram(path_a);
  const zxforge::zx::ZxDiagram b = load_diagram(path_b);
  json j;
  bool equivalent = false;
  try {
    const zxforge::zx::EquivReport eq =
        zxforge::zx::verify_equivalence(a, b, up_to_phase, opt.tol);
    equivalent = eq.equivalent;
    j["equivalent"] = eq.equivalent;
    j["max_deviation"] = sig12(eq.max_deviation);
    j["phase"] = complex_json(eq.phase);
    j["tol"] = sig12(opt.tol);
  } catch (const zxforge::TypeMismatch& e) {
    j["equivalent"] = false;
    j["reason"] = e.what();
  }
  emit(j);
  return equivalent ? 0 : EXIT_VERIFY;
}

// ---------------------------------------------------------------------------
// verify-hopf
// ---------------------------------------------------------------------------

// Bialgebra + antipode on the normalized rescaling of an assembled pair.
zxforge::hopf::AxiomReport rescaled_checks(const zxforge::hopf::HopfStructure& h,
                                           double tol) {
  const zxforge::hopf::HopfStructure n = zxforge::hopf::rescale_normalized(h);
  zxforge::hopf::AxiomReport r;
  r.tol = tol;
  r.merge("bialgebra", zxforge::hopf::check_unnormalized_bialgebra(n, tol));
  r.merge("antipode", zxforge::hopf::check_antipode(n, tol));
  return r;
}

int cmd_verify_hopf(const std::string& target, int cyclic_n, const Options& opt,
                    bool tol_given) {
  const double tol = tol_given ? opt.tol : zxforge::STRUCT_TOL;
  zxforge::hopf::AxiomReport report;
  report.tol = tol;
  if (target == "zx") {
    const auto [red, green] = zxforge::hopf::zx_structures();
    report.merge("zx", zxforge::hopf::check_f_hopf(red, green, tol));
    report.merge("zx/rescaled_red_green",
                 rescaled_checks(zxforge::hopf::assemble(red, green, red.S), tol));
    report.merge("zx/rescaled_green_red",
                 rescaled_checks(zxforge::hopf::assemble(green, red, green.S), tol));
  } else if (target == "cyclic") {
    if (cyclic_n < 1)
      throw zxforge::ParseError("verify-hopf cyclic needs a group order >= 1");
    const auto [conv, pw] = zxforge::hopf::build_group_algebra(cyclic_n);
    report.merge("cyclic", zxforge::hopf::check_f_hopf(conv, pw, tol));
    report.merge("cyclic/rescaled",
                 rescaled_checks(zxforge::hopf::assemble(conv, pw, conv.S), tol));
  } else {
    throw zxforge::ParseError("unknown verify-hopf target (want zx or cyclic): " +
                              target);
  }

  std::cout << report.to_json();
  return report.all_pass() ? 0 : EXIT_VERIFY;
}

// ---------------------------------------------------------------------------
// infogeo
// ---------------------------------------------------------------------------

double single_theta(const std::vector<double>& values, const std::string& family) {
  if (values.size() != 1)
    throw zxforge::ParseError("family " + family + " takes exactly one parameter");
  return values[0];
}

int chart_size(const std::string& family) {
  // "chart-<n>"
  const std::string prefix = "chart-";
  if (family.rfind(prefix, 0) != 0) return 0;
  try {
    const int n = std::stoi(family.substr(prefix.size()));
    return n >= 1 ? n : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

std::vector<cplx> chart_point(const std::vector<double>& values, int n) {
  if (static_cast<int>(values.size()) != 2 * n)
    throw zxforge::ParseError("chart-" + std::to_string(n) + " takes " +
                              std::to_string(2 * n) +
                              " values (x_1..x_n then y_1..y_n)");
  std::vector<cplx> z(n);
  for (int k = 0; k < n; ++k) z[k] = cplx{values[k], values[n + k]};
  return z;
}

double max_abs_real(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

int cmd_infogeo(const std::string& task, const std::string& family,
                const std::vector<double>& values) {
  json j;
  j["task"] = task;
  j["family"] = family;

  if (task == "fisher") {
    if (family != "bernoulli")
      throw zxforge::ParseError("fisher supports the bernoulli family");
    const double theta = single_theta(values, family);
    const zxforge::ProbFamily f = zxforge::bernoulli_family();
    const ComplexMatrix fisher = zxforge::fisher_matrix(f, {theta});

    // Cross-check: Fisher as the covariance of the score.
    const std::vector<double> p = f.p({theta});
    const auto jac = zxforge::prob_jacobian(f, {theta});
    double mean = 0;
    for (std::size_t k = 0; k < p.size(); ++k) mean += jac[k][0];
    double cov = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const double score = jac[k][0] / p[k];
      cov += p[k] * score * score;
    }
    cov -= mean * mean;  // mean of the score is sum_k dp_k
    const zxforge::KlReport kl = zxforge::kl_quadratic_check(f, {theta}, {1.0});

    j["theta"] = sig12(theta);
    j["fisher"] = real_matrix_json(fisher);
    j["entropy"] = sig12(zxforge::shannon_entropy(p));
    j["score_covariance_residual"] = sig12(std::abs(fisher(0, 0).real() - cov));
    j["kl_slope"] = sig12(kl.slope);
    j["kl_pass"] = kl.pass;
    emit(j);
    return 0;
  }

  if (task == "qfi") {
    zxforge::DensityFamily f;
    if (family == "diag-qubit")
      f = zxforge::diag_qubit_family();
    else if (family == "bloch-theta")
      f = zxforge::bloch_theta_density();
    else
      throw zxforge::ParseError("qfi supports diag-qubit and bloch-theta");
    const double theta = single_theta(values, family);
    const zxforge::QfiReport rep = zxforge::qfi_report(f, theta);
    j["theta"] = sig12(theta);
    j["trace"] = sig12(rep.trace);
    j["eigen_sum"] = sig12(rep.eigen_sum);
    j["spectral"] = sig12(rep.spectral);
    j["sld_residual"] = sig12(rep.sld_residual);
    j["trace_vs_eigen_sum"] = sig12(std::abs(rep.trace - rep.eigen_sum));
    j["trace_vs_spectral"] = sig12(std::abs(rep.trace - rep.spectral));
    if (family == "diag-qubit") {
      const double closed = 1.0 / (theta * (1.0 - theta));
      j["closed_form"] = sig12(closed);
      j["closed_form_deviation"] = sig12(std::abs(rep.trace - closed));
    } else {
      const ComplexMatrix q = zxforge::qgt(zxforge::bloch_theta_family(), {theta});
      j["four_re_qgt"] = sig12(4.0 * q(0, 0).real());
      j["four_re_qgt_deviation"] = sig12(std::abs(rep.trace - 4.0 * q(0, 0).real()));
    }
    emit(j);
    return 0;
  }

  if (task == "qgt") {
    if (family == "bloch-theta") {
      const double theta = single_theta(values, family);
      const ComplexMatrix q = zxforge::qgt(zxforge::bloch_theta_family(), {theta});
      j["theta"] = sig12(theta);
      j["qgt"] = matrix_json(q);
      const double fq = zxforge::qfi(zxforge::bloch_theta_density(), theta);
      j["qfi_4re_deviation"] = sig12(std::abs(4.0 * q(0, 0).real() - fq));
      emit(j);
      return 0;
    }
    const int n = chart_size(family);
    if (n == 0) throw zxforge::ParseError("qgt supports bloch-theta and chart-<n>");
    const std::vector<cplx> z = chart_point(values, n);
    std::vector<double> theta(values);
    j["qgt"] = matrix_json(zxforge::qgt(zxforge::chart_family(n), theta));
    j["fs_pullback_residual"] = sig12(
        max_abs_real(zxforge::qgt_chart_pullback(z), zxforge::fubini_study(z)));
    emit(j);
    return 0;
  }

  if (task == "fs") {
    const int n = chart_size(family);
    if (n == 0) throw zxforge::ParseError("fs needs a chart-<n> family");
    const std::vector<cplx> z = chart_point(values, n);
    const ComplexMatrix g = zxforge::fubini_study(z);
    j["fs"] = matrix_json(g);
    j["pullback_residual"] =
        sig12(max_abs_real(zxforge::qgt_chart_pullback(z), g));
    j["kahler_residual"] = sig12(max_abs_real(zxforge::kahler_metric_fd(z), g));
    emit(j);
    return 0;
  }

  throw zxforge::ParseError("unknown infogeo task (want fisher, qfi, qgt or fs): " +
                            task);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxforge: circuits, ZX-diagram rewriting, Hopf-algebra checks "
               "and information geometry"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("ZXFORGE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) opt.tol = v;
  }

  // Global flags are accepted on either side of the subcommand name.
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  auto* tol_opt =
      app.add_option("--tol", opt.tol, "Equivalence tolerance")->capture_default_str();
  app.add_option("--step-limit", opt.step_limit,
                 "Rewrite step cap (0 = 10x node count)");
  app.add_option("--seed", opt.seed, "Seed for randomized suites");

  std::string sim_path, input_state;
  auto* sim = app.add_subcommand("simulate", "Print a circuit's unitary or output state");
  sim->add_option("file", sim_path, "Circuit file (.qc)")->required();
  sim->add_option("--input-state", input_state, "Input basis state as a bitstring");

  std::string tozx_path;
  auto* tozx = app.add_subcommand("to-zx", "Translate a circuit to a ZX diagram");
  tozx->add_option("file", tozx_path, "Circuit file (.qc)")->required();

  std::string simp_path;
  auto* simp = app.add_subcommand("simplify", "Rewrite a diagram to a reduced form");
  simp->add_option("file", simp_path, "Input file (.qc or .zx.json)")->required();

  std::string eq_a, eq_b;
  bool up_to_phase = false;
  auto* veq = app.add_subcommand("verify-equiv", "Compare two diagrams/circuits");
  veq->add_option("a", eq_a, "First input")->required();
  veq->add_option("b", eq_b, "Second input")->required();
  veq->add_flag("--up-to-phase", up_to_phase, "Allow a global phase factor");

  std::string hopf_target;
  int cyclic_n = 2;
  auto* vh = app.add_subcommand("verify-hopf", "Run Hopf/Frobenius axiom suites");
  vh->add_option("target", hopf_target, "zx or cyclic")->required();
  vh->add_option("n", cyclic_n, "Cyclic group order (with target=cyclic)");

  std::string ig_task, ig_family;
  std::vector<double> ig_values;
  auto* ig = app.add_subcommand("infogeo", "Information-geometry quantities");
  ig->add_option("task", ig_task, "fisher, qfi, qgt or fs")->required();
  ig->add_option("family", ig_family, "bernoulli, bloch-theta, diag-qubit, chart-<n>")
      ->required();
  ig->add_option("values", ig_values, "Family parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : EXIT_PARSE;
  }

  try {
    if (*sim) return cmd_simulate(sim_path, input_state, opt);
    if (*tozx) return cmd_to_zx(tozx_path, opt);
    if (*simp) return cmd_simplify(simp_path, opt);
    if (*veq) return cmd_verify_equiv(eq_a, eq_b, up_to_phase, opt);
    if (*vh) return cmd_verify_hopf(hopf_target, cyclic_n, opt, tol_opt->count() > 0);
    if (*ig) return cmd_infogeo(ig_task, ig_family, ig_values);
  } catch (const zxforge::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_TOO_LARGE;
  } catch (const zxforge::StepLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_STEP_LIMIT;
  } catch (const zxforge::SoundnessViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_VERIFY;
  } catch (const zxforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_PARSE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
