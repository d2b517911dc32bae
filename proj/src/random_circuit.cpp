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

#include "zxroute/random_circuit.hpp"

#include <random>
#include <stdexcept>

namespace zxroute {

Circuit random_clifford_t(std::size_t num_qubits, std::size_t depth,
                          double p_t, double p_cx, std::uint64_t seed) {
  if (num_qubits == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  if (depth == 0) {
    throw std::invalid_argument("depth must be positive");
  }
  if (p_t < 0 || p_cx < 0 || p_t + p_cx > 1.0) {
    throw std::invalid_argument("gate probabilities must satisfy p_t + p_cx <= 1");
  }
  if (p_cx > 0 && num_qubits < 2) {
    throw std::invalid_argument("p_cx > 0 requires at least two qubits");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_qubit(0, num_qubits - 1);

  Circuit circuit(num_qubits);
  for (std::size_t layer = 0; layer < depth; ++layer) {
    const double r = coin(rng);
    if (r < p_cx) {
      const std::size_t control = pick_qubit(rng);
      std::uniform_int_distribution<std::size_t> pick_other(0, num_qubits - 2);
      std::size_t target = pick_other(rng);
      if (target >= control) {
        ++target;
      }
      circuit.append(Gate::cx(control, target));
    } else if (r < p_cx + p_t) {
      circuit.append(Gate::t(pick_qubit(rng)));
    } else {
      const std::size_t q = pick_qubit(rng);
      std::uniform_int_distribution<int> pick_kind(0, 3);
      switch (pick_kind(rng)) {
        case 0:
          circuit.append(Gate::h(q));
          break;
        case 1:
          circuit.append(Gate::s(q));
          break;
        case 2:
          circuit.append(Gate::z(q));
          break;
        default:
          circuit.append(Gate::x(q));
          break;
      }
    }
  }
  return circuit;
}

}  // namespace zxroute
