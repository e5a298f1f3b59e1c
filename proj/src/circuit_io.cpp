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

#include "zxforge/circuit_io.hpp"

#include <optional>
#include <sstream>

#include "zxforge/errors.hpp"

namespace zxforge {
namespace circ {

namespace {

std::optional<GateKind> kind_from_name(const std::string& name) {
  if (name == "X") return GateKind::X;
  if (name == "Y") return GateKind::Y;
  if (name == "Z") return GateKind::Z;
  if (name == "H") return GateKind::H;
  if (name == "S") return GateKind::S;
  if (name == "T") return GateKind::T;
  if (name == "RZ") return GateKind::RZ;
  if (name == "RX") return GateKind::RX;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "CCNOT") return GateKind::CCNOT;
  return std::nullopt;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'",
                     line_no);
  }
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n_qubits = -1;
  std::vector<Gate> gates;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (n_qubits < 0) {
      if (toks[0] != "qubits" || toks.size() != 2)
        throw ParseError("expected 'qubits <n>' header", line_no);
      n_qubits = parse_int(toks[1], line_no, "qubit count");
      if (n_qubits <= 0) throw ParseError("qubit count must be >= 1", line_no);
      continue;
    }

    std::string name = toks[0];
    Phase angle = Phase::zero();
    std::size_t first_target = 1;

    // Dagger aliases lower to plain rotations.
    if (name == "SD") {
      name = "RZ";
      angle = Phase(-1, 2);
    } else if (name == "TD") {
      name = "RZ";
      angle = Phase(-1, 4);
    }

    std::optional<GateKind> kind = kind_from_name(name);
    if (!kind) throw ParseError("unknown gate '" + toks[0] + "'", line_no);

    if (gate_has_angle(*kind) && toks[0] != "SD" && toks[0] != "TD") {
      if (toks.size() < 2)
        throw ParseError("missing angle for " + name, line_no);
      try {
        angle = Phase::parse(toks[1]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      first_target = 2;
    }

    std::vector<int> targets;
    for (std::size_t i = first_target; i < toks.size(); ++i) {
      int t = parse_int(toks[i], line_no, "target qubit");
      if (t < 0 || t >= n_qubits)
        throw IndexOutOfRange("line " + std::to_string(line_no) +
                              ": target qubit " + std::to_string(t) +
                              " out of range (qubits declared: " +
                              std::to_string(n_qubits) + ")");
      targets.push_back(t);
    }
    if (static_cast<int>(targets.size()) != gate_arity(*kind))
      throw ParseError(name + " expects " +
                           std::to_string(gate_arity(*kind)) + " target(s)",
                       line_no);
    try {
      gates.emplace_back(*kind, std::move(targets), angle);
    } catch (const ShapeError& e) {
      throw ParseError(e.what(), line_no);
    }
  }

  if (n_qubits < 0) throw ParseError("missing 'qubits <n>' header", line_no);
  return Circuit(n_qubits, std::move(gates));
}

std::string unparse_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << "\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind);
    if (gate_has_angle(g.kind)) out << " " << g.angle.str();
    for (int t : g.targets) out << " " << t;
    out << "\n";
  }
  return out.str();
}

}  // namespace circ
}  // namespace zxforge
