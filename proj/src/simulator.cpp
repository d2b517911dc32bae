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

#include "zxroute/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace zxroute {

namespace {

using Complex = std::complex<double>;

// Applies a 2x2 gate to qubit q of every column of U (left-multiplication).
void apply_single(Unitary& u, std::size_t q, Complex m00, Complex m01,
                  Complex m10, Complex m11) {
  const std::size_t dim = u.dim();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t row = 0; row < dim; ++row) {
    if ((row & bit) != 0) {
      continue;
    }
    const std::size_t row1 = row | bit;
    for (std::size_t col = 0; col < dim; ++col) {
      const Complex a = u.at(row, col);
      const Complex b = u.at(row1, col);
      u.at(row, col) = m00 * a + m01 * b;
      u.at(row1, col) = m10 * a + m11 * b;
    }
  }
}

void apply_gate(Unitary& u, const Gate& gate) {
  const Gate g = gate.canonicalized();
  const std::size_t dim = u.dim();
  switch (g.kind) {
    case GateKind::RZ: {
      const double a = g.phase.radians();
      apply_single(u, g.qubits[0], Complex(1, 0), Complex(0, 0), Complex(0, 0),
                   std::polar(1.0, a));
      return;
    }
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      apply_single(u, g.qubits[0], Complex(s, 0), Complex(s, 0), Complex(s, 0),
                   Complex(-s, 0));
      return;
    }
    case GateKind::X:
      apply_single(u, g.qubits[0], Complex(0, 0), Complex(1, 0), Complex(1, 0),
                   Complex(0, 0));
      return;
    case GateKind::Z:
      apply_single(u, g.qubits[0], Complex(1, 0), Complex(0, 0), Complex(0, 0),
                   Complex(-1, 0));
      return;
    case GateKind::CX: {
      const std::size_t cbit = std::size_t{1} << g.qubits[0];
      const std::size_t tbit = std::size_t{1} << g.qubits[1];
      for (std::size_t row = 0; row < dim; ++row) {
        if ((row & cbit) != 0 && (row & tbit) == 0) {
          const std::size_t other = row | tbit;
          for (std::size_t col = 0; col < dim; ++col) {
            std::swap(u.at(row, col), u.at(other, col));
          }
        }
      }
      return;
    }
    case GateKind::CZ: {
      const std::size_t mask =
          (std::size_t{1} << g.qubits[0]) | (std::size_t{1} << g.qubits[1]);
      for (std::size_t row = 0; row < dim; ++row) {
        if ((row & mask) == mask) {
          for (std::size_t col = 0; col < dim; ++col) {
            u.at(row, col) = -u.at(row, col);
          }
        }
      }
      return;
    }
    case GateKind::SWAP: {
      const std::size_t abit = std::size_t{1} << g.qubits[0];
      const std::size_t bbit = std::size_t{1} << g.qubits[1];
      for (std::size_t row = 0; row < dim; ++row) {
        if ((row & abit) != 0 && (row & bbit) == 0) {
          const std::size_t other = (row & ~abit) | bbit;
          for (std::size_t col = 0; col < dim; ++col) {
            std::swap(u.at(row, col), u.at(other, col));
          }
        }
      }
      return;
    }
    default:
      throw std::logic_error("unexpected gate after canonicalization");
  }
}

}  // namespace

Unitary::Unitary(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Unitary Unitary::identity(std::size_t dim) {
  Unitary u(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    u.at(i, i) = 1.0;
  }
  return u;
}

Unitary Unitary::operator*(const Unitary& rhs) const {
  if (dim_ != rhs.dim_) {
    throw std::invalid_argument("dimension mismatch");
  }
  Unitary out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex v = at(i, k);
      if (v == Complex(0, 0)) {
        continue;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) += v * rhs.at(k, j);
      }
    }
  }
  return out;
}

double Unitary::max_abs_diff(const Unitary& a, const Unitary& b) {
  if (a.dim_ != b.dim_) {
    throw std::invalid_argument("dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    worst = std::max(worst, std::abs(a.data_[i] - b.data_[i]));
  }
  return worst;
}

Unitary simulate(const Circuit& circuit) {
  if (circuit.num_qubits > kMaxOracleQubits) {
    throw std::invalid_argument("oracle is limited to 12 qubits");
  }
  Unitary u = Unitary::identity(std::size_t{1} << circuit.num_qubits);
  for (const Gate& g : circuit.gates) {
    apply_gate(u, g);
  }
  return u;
}

namespace {

bool unitaries_equal_up_to_phase(const Unitary& ua, const Unitary& ub,
                                 double tol) {
  const std::size_t dim = ua.dim();
  double best_mag = 0.0;
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double mag = std::abs(ub.at(i, j));
      if (mag > best_mag) {
        best_mag = mag;
        bi = i;
        bj = j;
      }
    }
  }
  if (best_mag == 0.0) {
    return false;
  }
  const Complex ratio = ua.at(bi, bj) / ub.at(bi, bj);
  const double ratio_mag = std::abs(ratio);
  if (ratio_mag == 0.0) {
    return false;
  }
  const Complex phase = ratio / ratio_mag;
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      worst = std::max(worst, std::abs(ua.at(i, j) - phase * ub.at(i, j)));
    }
  }
  return worst < tol;
}

}  // namespace

bool equivalent_up_to_phase(const Circuit& a, const Circuit& b, double tol) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("qubit count mismatch");
  }
  return unitaries_equal_up_to_phase(simulate(a), simulate(b), tol);
}

Unitary permutation_unitary(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) {
      throw std::invalid_argument("perm is not a bijection");
    }
    seen[p] = true;
  }
  const std::size_t dim = std::size_t{1} << n;
  Unitary u(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if ((x >> q) & 1) {
        y |= std::size_t{1} << perm[q];
      }
    }
    u.at(y, x) = 1.0;
  }
  return u;
}

bool equivalent_up_to_permutation(const Circuit& a, const Circuit& b,
                                  const std::vector<std::size_t>& perm,
                                  double tol) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("qubit count mismatch");
  }
  if (perm.size() != a.num_qubits) {
    throw std::invalid_argument("perm size mismatch");
  }
  const Unitary ua = simulate(a);
  const Unitary ub = permutation_unitary(perm) * simulate(b);
  return unitaries_equal_up_to_phase(ua, ub, tol);
}

}  // namespace zxroute
