// Copyright 2026 The zxroute authors
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

#include "zxroute/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace zxroute {

bool is_two_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
      return true;
    default:
      return false;
  }
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RZ:
      return "rz";
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Z:
      return "z";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::CX:
      return "cx";
    case GateKind::CZ:
      return "cz";
    case GateKind::SWAP:
      return "swap";
  }
  return "?";
}

Gate Gate::canonicalized() const {
  switch (kind) {
    case GateKind::S:
      return Gate::rz(Phase(1, 2), qubits[0]);
    case GateKind::Sdg:
      return Gate::rz(Phase(-1, 2), qubits[0]);
    case GateKind::T:
      return Gate::rz(Phase(1, 4), qubits[0]);
    case GateKind::Tdg:
      return Gate::rz(Phase(-1, 4), qubits[0]);
    default:
      return *this;
  }
}

std::string Gate::to_string() const {
  std::string s = gate_name(kind);
  if (kind == GateKind::RZ) {
    s += "(" + phase.to_qasm() + ")";
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    s += i == 0 ? " " : ",";
    s += std::to_string(qubits[i]);
  }
  return s;
}

Circuit::Circuit(std::size_t n, std::vector<Gate> gs)
    : num_qubits(n), gates(std::move(gs)) {
  validate();
}

void Circuit::append(Gate gate) {
  gates.push_back(std::move(gate));
  const Gate& g = gates.back();
  const std::size_t expected = is_two_qubit(g.kind) ? 2 : 1;
  if (g.qubits.size() != expected) {
    throw std::invalid_argument("gate has wrong qubit count: " +
                                g.to_string());
  }
  for (std::size_t q : g.qubits) {
    if (q >= num_qubits) {
      throw std::invalid_argument("qubit index out of range: " +
                                  g.to_string());
    }
  }
  if (expected == 2 && g.qubits[0] == g.qubits[1]) {
    throw std::invalid_argument("two-qubit gate on identical qubits: " +
                                g.to_string());
  }
}

void Circuit::validate() const {
  Circuit check(num_qubits);
  for (const Gate& g : gates) {
    check.append(g);
  }
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> level(num_qubits, 0);
  for (const Gate& g : gates) {
    std::size_t d = 0;
    for (std::size_t q : g.qubits) {
      d = std::max(d, level[q]);
    }
    for (std::size_t q : g.qubits) {
      level[q] = d + 1;
    }
  }
  return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

std::size_t Circuit::two_qubit_count() const {
  std::size_t n = 0;
  for (const Gate& g : gates) {
    n += is_two_qubit(g.kind) ? 1 : 0;
  }
  return n;
}

std::size_t Circuit::two_qubit_cost() const {
  std::size_t n = 0;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::SWAP) {
      n += 3;
    } else if (is_two_qubit(g.kind)) {
      n += 1;
    }
  }
  return n;
}

Circuit Circuit::canonicalized() const {
  Circuit out(num_qubits);
  out.gates.reserve(gates.size());
  for (const Gate& g : gates) {
    out.gates.push_back(g.canonicalized());
  }
  return out;
}

}  // namespace zxroute
