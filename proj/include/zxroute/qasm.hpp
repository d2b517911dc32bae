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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxroute/circuit.hpp"

namespace zxroute {

class QasmError : public std::runtime_error {
 public:
  QasmError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseDiagnostics {
  struct AngleSnap {
    std::size_t line;
    double error;  // |requested angle - stored angle| in radians
  };
  std::vector<AngleSnap> angle_snaps;
};

/// Parses the OpenQASM 2.0 subset documented in the README: one qreg, gates
/// {h,x,z,s,sdg,t,tdg,rz,cx,cz,swap}, barriers ignored, no classical
/// registers, no measure, no custom gate definitions.
Circuit parse_qasm(std::string_view text,
                   ParseDiagnostics* diagnostics = nullptr);

/// Emits QASM for the canonicalized circuit; parse_qasm(write_qasm(c))
/// equals c.canonicalized() gate for gate.
std::string write_qasm(const Circuit& circuit);

}  // namespace zxroute
