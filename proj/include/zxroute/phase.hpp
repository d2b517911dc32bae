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

#include <cstdint>
#include <string>

namespace zxroute {

/// An angle expressed as the exact rational (num/den)*pi, kept in lowest
/// terms with num normalized into [0, 2*den). Rewrite rules branch on
/// Clifford/Pauli phases, so angles are never stored as floats.
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1, 1); }
  static Phase pi_over(std::int64_t den) { return Phase(1, den); }

  /// Best rational approximation of (radians/pi) with denominator <= max_den.
  /// `snap_error` (optional) receives |radians - approximated angle|.
  static Phase from_radians(double radians, std::int64_t max_den,
                            double* snap_error = nullptr);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_pauli() const { return den_ == 1; }
  bool is_clifford() const { return den_ == 1 || den_ == 2; }

  double radians() const;

  Phase operator+(const Phase& other) const;
  Phase operator-(const Phase& other) const;
  Phase operator-() const;
  bool operator==(const Phase& other) const = default;

  /// Render as a QASM angle expression: "0", "pi", "pi/2", "3*pi/4", "7*pi".
  std::string to_qasm() const;
  std::string to_string() const { return to_qasm(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace zxroute
