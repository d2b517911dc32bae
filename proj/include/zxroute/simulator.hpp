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

#include <complex>
#include <cstddef>
#include <vector>

#include "zxroute/circuit.hpp"

namespace zxroute {

/// Dense row-major complex matrix. Basis index bit q corresponds to qubit q,
/// so qubit 0 is the least significant tensor factor.
class Unitary {
 public:
  explicit Unitary(std::size_t dim);
  static Unitary identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  Unitary operator*(const Unitary& rhs) const;

  /// max_ij |a_ij - b_ij|
  static double max_abs_diff(const Unitary& a, const Unitary& b);

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> data_;
};

constexpr std::size_t kMaxOracleQubits = 12;

/// Full circuit unitary. Guarded to kMaxOracleQubits.
Unitary simulate(const Circuit& circuit);

/// True iff max-norm of (U_a - e^{i theta} U_b) < tol, with theta chosen to
/// align the largest-magnitude entries.
bool equivalent_up_to_phase(const Circuit& a, const Circuit& b, double tol);

/// True iff a is equivalent (up to global phase) to b with its outputs
/// relabeled by perm: qubit q of b becomes qubit perm[q].
bool equivalent_up_to_permutation(const Circuit& a, const Circuit& b,
                                  const std::vector<std::size_t>& perm,
                                  double tol);

/// The unitary permuting qubit q to position perm[q].
Unitary permutation_unitary(const std::vector<std::size_t>& perm);

}  // namespace zxroute
