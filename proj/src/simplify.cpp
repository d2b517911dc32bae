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

#include "zxroute/simplify.hpp"

#include <stdexcept>
#include <vector>

namespace zxroute {

namespace {

bool is_proper_clifford(const Phase& p) {
  return p == Phase(1, 2) || p == Phase(-1, 2);
}

bool is_pauli_phase(const Phase& p) { return p.is_pauli(); }

}  // namespace

bool local_complementation_applies(const GraphLikeDiagram& g, SpiderId s) {
  const ZxDiagram& d = g.diagram;
  return d.alive(s) && !d.is_boundary(s) && d.is_interior(s) &&
         is_proper_clifford(d.phase(s));
}

GraphLikeDiagram local_complementation(GraphLikeDiagram g, SpiderId s) {
  ZxDiagram& d = g.diagram;
  if (!d.alive(s) || d.is_boundary(s)) {
    throw std::invalid_argument("local complementation needs a live Z spider");
  }
  if (!d.is_interior(s)) {
    throw std::invalid_argument(
        "local complementation target is adjacent to a boundary");
  }
  if (!is_proper_clifford(d.phase(s))) {
    throw std::invalid_argument("local complementation needs phase +-pi/2");
  }
  const Phase shift = -d.phase(s);
  std::vector<SpiderId> nbrs;
  for (const auto& [nbr, kind] : d.neighbors(s)) {
    nbrs.push_back(nbr);
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    d.add_to_phase(nbrs[i], shift);
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      d.toggle_hadamard_wire(nbrs[i], nbrs[j]);
    }
  }
  d.remove_spider(s);
#ifndef NDEBUG
  assert_graph_like(g);
#endif
  return g;
}

bool pivot_applies(const GraphLikeDiagram& g, SpiderId a, SpiderId b) {
  const ZxDiagram& d = g.diagram;
  if (!d.alive(a) || !d.alive(b) || a == b) {
    return false;
  }
  if (d.is_boundary(a) || d.is_boundary(b) || !d.is_interior(a) ||
      !d.is_interior(b)) {
    return false;
  }
  if (!is_pauli_phase(d.phase(a)) || !is_pauli_phase(d.phase(b))) {
    return false;
  }
  auto wire = d.wire_between(a, b);
  return wire && *wire == WireKind::Hadamard;
}

GraphLikeDiagram pivot(GraphLikeDiagram g, SpiderId a, SpiderId b) {
  if (!pivot_applies(g, a, b)) {
    throw std::invalid_argument(
        "pivot needs interior Pauli spiders joined by a Hadamard wire");
  }
  ZxDiagram& d = g.diagram;
  const Phase phase_a = d.phase(a);
  const Phase phase_b = d.phase(b);

  std::vector<SpiderId> only_a, only_b, shared;
  for (const auto& [nbr, kind] : d.neighbors(a)) {
    if (nbr == b) {
      continue;
    }
    if (d.wire_between(b, nbr)) {
      shared.push_back(nbr);
    } else {
      only_a.push_back(nbr);
    }
  }
  for (const auto& [nbr, kind] : d.neighbors(b)) {
    if (nbr != a && !d.wire_between(a, nbr)) {
      only_b.push_back(nbr);
    }
  }

  for (SpiderId u : only_a) {
    for (SpiderId v : only_b) {
      d.toggle_hadamard_wire(u, v);
    }
    for (SpiderId v : shared) {
      d.toggle_hadamard_wire(u, v);
    }
  }
  for (SpiderId u : only_b) {
    for (SpiderId v : shared) {
      d.toggle_hadamard_wire(u, v);
    }
  }

  for (SpiderId u : only_a) {
    d.add_to_phase(u, phase_b);
  }
  for (SpiderId u : only_b) {
    d.add_to_phase(u, phase_a);
  }
  for (SpiderId u : shared) {
    d.add_to_phase(u, phase_a + phase_b + Phase::pi());
  }

  d.remove_spider(a);
  d.remove_spider(b);
#ifndef NDEBUG
  assert_graph_like(g);
#endif
  return g;
}

namespace {

// Lowest-id local complementation target, if any.
std::optional<SpiderId> find_lcomp(const GraphLikeDiagram& g) {
  for (SpiderId s : g.diagram.spider_ids()) {
    if (!g.diagram.is_boundary(s) && local_complementation_applies(g, s)) {
      return s;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<SpiderId, SpiderId>> find_pivot(
    const GraphLikeDiagram& g) {
  for (SpiderId a : g.diagram.spider_ids()) {
    if (g.diagram.is_boundary(a)) {
      continue;
    }
    for (const auto& [b, kind] : g.diagram.neighbors(a)) {
      if (b > a && pivot_applies(g, a, b)) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_simplification_fixpoint(const GraphLikeDiagram& g) {
  return !find_lcomp(g).has_value() && !find_pivot(g).has_value();
}

GraphLikeDiagram interior_clifford_simp(GraphLikeDiagram g) {
  while (true) {
    if (auto s = find_lcomp(g)) {
      g = local_complementation(std::move(g), *s);
      continue;
    }
    if (auto ab = find_pivot(g)) {
      g = pivot(std::move(g), ab->first, ab->second);
      continue;
    }
    break;
  }
  return g;
}

}  // namespace zxroute
