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
#include <vector>

#include "zxroute/circuit.hpp"
#include "zxroute/hardware.hpp"

namespace zxroute {

/// Injective logical-to-physical qubit assignment.
struct Mapping {
  std::vector<std::size_t> log_to_phys;

  static Mapping identity(std::size_t n);
  void validate(std::size_t num_physical) const;
  std::size_t operator[](std::size_t logical) const {
    return log_to_phys[logical];
  }
  bool operator==(const Mapping& other) const = default;
};

struct GateSpan {
  double start = 0;
  double end = 0;
};

struct Schedule {
  std::vector<GateSpan> spans;  // one per gate
  double makespan = 0;
  double idle_time_total = 0;  // summed over qubits that carry a gate
};

struct RoutedResult {
  Circuit circuit;  // over physical qubits
  Mapping final_mapping;
  std::size_t swap_count = 0;  // router-inserted SWAPs
  double asp = 1.0;
  Schedule schedule;
  double idle_time_total = 0;
};

/// SWAP-insertion routing: single-qubit gates pass through, blocked
/// two-qubit gates trigger swaps chosen among the edges incident to the
/// blocked pair that reduce its distance, scored with a decayed lookahead
/// over upcoming two-qubit gates. Deterministic tie-break by edge order.
/// SWAP gates in the source circuit are virtualized: the mapping absorbs
/// them and the relabeling is reported through final_mapping. SWAPs the
/// router itself inserts stay in the output circuit.
RoutedResult route(const Circuit& circuit, const HardwareModel& hw,
                   const Mapping& initial);
RoutedResult route(const Circuit& circuit, const HardwareModel& hw);

/// ASAP schedule: a gate starts when all its qubits are free. SWAP occupies
/// its qubits for three two-qubit durations.
Schedule schedule(const Circuit& circuit, const HardwareModel& hw);

/// exp(-t_idle / T_eff) times the product of per-operation fidelities, with
/// SWAP counted as three two-qubit operations.
double asp(const Circuit& circuit, const HardwareModel& hw);

/// (asp_new - asp_base) / asp_base
double delta_fidelity(double asp_new, double asp_base);

bool hardware_legal(const Circuit& circuit, const HardwareModel& hw);

/// Output permutation reported by routing with an identity initial mapping:
/// logical qubit q ends on wire final_mapping[q].
std::vector<std::size_t> routed_permutation(const RoutedResult& result,
                                            std::size_t num_logical);

}  // namespace zxroute
