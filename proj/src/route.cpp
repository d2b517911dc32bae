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

#include "zxroute/route.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zxroute {

namespace {

constexpr std::size_t kLookaheadGates = 20;
constexpr double kLookaheadDecay = 0.5;

double gate_duration(const Gate& g, const HardwareParams& p) {
  if (g.kind == GateKind::SWAP) {
    return 3.0 * p.duration_2q;
  }
  return is_two_qubit(g.kind) ? p.duration_2q : p.duration_1q;
}

double gate_fidelity(const Gate& g, const HardwareParams& p) {
  if (g.kind == GateKind::SWAP) {
    return p.fidelity_2q * p.fidelity_2q * p.fidelity_2q;
  }
  return is_two_qubit(g.kind) ? p.fidelity_2q : p.fidelity_1q;
}

}  // namespace

Mapping Mapping::identity(std::size_t n) {
  Mapping m;
  m.log_to_phys.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.log_to_phys[i] = i;
  }
  return m;
}

void Mapping::validate(std::size_t num_physical) const {
  std::vector<bool> used(num_physical, false);
  for (std::size_t p : log_to_phys) {
    if (p >= num_physical || used[p]) {
      throw std::invalid_argument("mapping is not injective into hardware");
    }
    used[p] = true;
  }
}

bool hardware_legal(const Circuit& circuit, const HardwareModel& hw) {
  if (circuit.num_qubits > hw.num_physical()) {
    return false;
  }
  for (const Gate& g : circuit.gates) {
    if (is_two_qubit(g.kind) && !hw.coupled(g.qubits[0], g.qubits[1])) {
      return false;
    }
  }
  return true;
}

RoutedResult route(const Circuit& circuit, const HardwareModel& hw) {
  return route(circuit, hw, Mapping::identity(circuit.num_qubits));
}

RoutedResult route(const Circuit& circuit, const HardwareModel& hw,
                   const Mapping& initial) {
  if (circuit.num_qubits > hw.num_physical()) {
    throw std::invalid_argument("more logical than physical qubits");
  }
  if (initial.log_to_phys.size() != circuit.num_qubits) {
    throw std::invalid_argument("initial mapping size mismatch");
  }
  initial.validate(hw.num_physical());

  std::vector<std::size_t> map = initial.log_to_phys;
  RoutedResult result;
  result.circuit = Circuit(hw.num_physical());

  // Positions of two-qubit gates, for the lookahead window. Source SWAPs
  // are excluded: they cost nothing (virtualized below).
  std::vector<std::size_t> twoq_positions;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    if (is_two_qubit(circuit.gates[i].kind) &&
        circuit.gates[i].kind != GateKind::SWAP) {
      twoq_positions.push_back(i);
    }
  }

  std::size_t twoq_cursor = 0;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    if (!is_two_qubit(g.kind)) {
      Gate mapped = g;
      mapped.qubits[0] = map[g.qubits[0]];
      result.circuit.append(mapped);
      continue;
    }
    if (g.kind == GateKind::SWAP) {
      // Source SWAPs are virtualized: the mapping absorbs the relabeling
      // and the permutation surfaces in final_mapping.
      std::swap(map[g.qubits[0]], map[g.qubits[1]]);
      continue;
    }
    while (twoq_cursor < twoq_positions.size() &&
           twoq_positions[twoq_cursor] <= i) {
      ++twoq_cursor;
    }
    const std::size_t la = g.qubits[0];
    const std::size_t lb = g.qubits[1];
    while (hw.distance(map[la], map[lb]) > 1) {
      // Candidate swaps: edges touching the blocked pair that reduce its
      // distance.
      const std::size_t pa = map[la];
      const std::size_t pb = map[lb];
      const std::size_t dist_now = hw.distance(pa, pb);
      std::vector<std::size_t> phys_to_log(hw.num_physical(),
                                           hw.num_physical());
      for (std::size_t l = 0; l < map.size(); ++l) {
        phys_to_log[map[l]] = l;
      }
      double best_cost = 0;
      std::pair<std::size_t, std::size_t> best_edge{hw.num_physical(),
                                                    hw.num_physical()};
      for (const auto& edge : hw.edges()) {
        if (edge.first != pa && edge.second != pa && edge.first != pb &&
            edge.second != pb) {
          continue;
        }
        auto swapped_pos = [&](std::size_t logical) {
          const std::size_t p = map[logical];
          if (p == edge.first) {
            return edge.second;
          }
          if (p == edge.second) {
            return edge.first;
          }
          return p;
        };
        const std::size_t dist_after =
            hw.distance(swapped_pos(la), swapped_pos(lb));
        if (dist_after >= dist_now) {
          continue;
        }
        double cost = static_cast<double>(dist_after);
        double weight = kLookaheadDecay;
        for (std::size_t k = twoq_cursor;
             k < twoq_positions.size() &&
             k < twoq_cursor + kLookaheadGates;
             ++k) {
          const Gate& future = circuit.gates[twoq_positions[k]];
          cost += weight * static_cast<double>(hw.distance(
                               swapped_pos(future.qubits[0]),
                               swapped_pos(future.qubits[1])));
          weight *= kLookaheadDecay;
        }
        if (best_edge.first == hw.num_physical() || cost < best_cost) {
          best_cost = cost;
          best_edge = edge;
        }
      }
      if (best_edge.first == hw.num_physical()) {
        throw std::logic_error("no distance-reducing swap found");
      }
      result.circuit.append(Gate::swap(best_edge.first, best_edge.second));
      ++result.swap_count;
      const std::size_t l1 = phys_to_log[best_edge.first];
      const std::size_t l2 = phys_to_log[best_edge.second];
      if (l1 < map.size()) {
        map[l1] = best_edge.second;
      }
      if (l2 < map.size()) {
        map[l2] = best_edge.first;
      }
    }
    Gate mapped = g;
    mapped.qubits[0] = map[la];
    mapped.qubits[1] = map[lb];
    result.circuit.append(mapped);
  }

  result.final_mapping.log_to_phys = std::move(map);
  result.schedule = schedule(result.circuit, hw);
  result.idle_time_total = result.schedule.idle_time_total;
  result.asp = asp(result.circuit, hw);
  return result;
}

Schedule schedule(const Circuit& circuit, const HardwareModel& hw) {
  if (!hardware_legal(circuit, hw)) {
    throw std::invalid_argument("circuit is not hardware-legal");
  }
  Schedule s;
  s.spans.reserve(circuit.gates.size());
  std::vector<double> free_at(circuit.num_qubits, 0.0);
  std::vector<double> busy(circuit.num_qubits, 0.0);
  std::vector<bool> active(circuit.num_qubits, false);
  for (const Gate& g : circuit.gates) {
    double start = 0;
    for (std::size_t q : g.qubits) {
      start = std::max(start, free_at[q]);
    }
    const double dur = gate_duration(g, hw.params());
    for (std::size_t q : g.qubits) {
      free_at[q] = start + dur;
      busy[q] += dur;
      active[q] = true;
    }
    s.spans.push_back({start, start + dur});
    s.makespan = std::max(s.makespan, start + dur);
  }
  for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
    if (active[q]) {
      s.idle_time_total += s.makespan - busy[q];
    }
  }
  return s;
}

double asp(const Circuit& circuit, const HardwareModel& hw) {
  const Schedule s = schedule(circuit, hw);
  double product = 1.0;
  for (const Gate& g : circuit.gates) {
    product *= gate_fidelity(g, hw.params());
  }
  return std::exp(-s.idle_time_total / hw.t_eff()) * product;
}

double delta_fidelity(double asp_new, double asp_base) {
  if (asp_base <= 0) {
    throw std::invalid_argument("baseline ASP must be positive");
  }
  return (asp_new - asp_base) / asp_base;
}

std::vector<std::size_t> routed_permutation(const RoutedResult& result,
                                            std::size_t num_logical) {
  std::vector<std::size_t> perm(num_logical);
  for (std::size_t q = 0; q < num_logical; ++q) {
    perm[q] = result.final_mapping.log_to_phys[q];
  }
  return perm;
}

}  // namespace zxroute
