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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zxroute/phase.hpp"

namespace zxroute {

enum class GateKind {
  RZ,
  H,
  X,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  CX,
  CZ,
  SWAP,
};

bool is_two_qubit(GateKind kind);
const char* gate_name(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;  // [q] or [control, target] for CX
  Phase phase;                      // meaningful for RZ only

  static Gate rz(Phase phase, std::size_t q) {
    return Gate{GateKind::RZ, {q}, phase};
  }
  static Gate h(std::size_t q) { return Gate{GateKind::H, {q}, Phase()}; }
  static Gate x(std::size_t q) { return Gate{GateKind::X, {q}, Phase()}; }
  static Gate z(std::size_t q) { return Gate{GateKind::Z, {q}, Phase()}; }
  static Gate s(std::size_t q) { return Gate{GateKind::S, {q}, Phase()}; }
  static Gate sdg(std::size_t q) { return Gate{GateKind::Sdg, {q}, Phase()}; }
  static Gate t(std::size_t q) { return Gate{GateKind::T, {q}, Phase()}; }
  static Gate tdg(std::size_t q) { return Gate{GateKind::Tdg, {q}, Phase()}; }
  static Gate cx(std::size_t control, std::size_t target) {
    return Gate{GateKind::CX, {control, target}, Phase()};
  }
  static Gate cz(std::size_t a, std::size_t b) {
    return Gate{GateKind::CZ, {a, b}, Phase()};
  }
  static Gate swap(std::size_t a, std::size_t b) {
    return Gate{GateKind::SWAP, {a, b}, Phase()};
  }

  /// S/Sdg/T/Tdg are sugar for RZ with phases pi/2, -pi/2, pi/4, -pi/4.
  Gate canonicalized() const;

  bool operator==(const Gate& other) const = default;
  std::string to_string() const;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n) : num_qubits(n) {}
  Circuit(std::size_t n, std::vector<Gate> gs);

  void append(Gate gate);
  void validate() const;

  /// Longest chain of gates sharing qubits.
  std::size_t depth() const;
  std::size_t two_qubit_count() const;
  /// Two-qubit cost with SWAP counted as 3 CX.
  std::size_t two_qubit_cost() const;

  Circuit canonicalized() const;

  bool operator==(const Circuit& other) const = default;
};

}  // namespace zxroute
