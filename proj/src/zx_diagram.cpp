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

#include "zxroute/zx_diagram.hpp"

#include <cassert>
#include <stdexcept>

namespace zxroute {

SpiderId ZxDiagram::add_spider(SpiderKind kind, Phase phase) {
  spiders_.push_back({kind, phase, true});
  adjacency_.emplace_back();
  ++alive_count_;
  return static_cast<SpiderId>(spiders_.size() - 1);
}

SpiderId ZxDiagram::add_input_boundary() {
  const SpiderId s = add_spider(SpiderKind::Boundary);
  inputs_.push_back(s);
  return s;
}

SpiderId ZxDiagram::add_output_boundary() {
  const SpiderId s = add_spider(SpiderKind::Boundary);
  outputs_.push_back(s);
  return s;
}

void ZxDiagram::add_wire(SpiderId a, SpiderId b, WireKind kind) {
  if (!alive(a) || !alive(b)) {
    throw std::logic_error("wire endpoint is not alive");
  }
  if (a == b) {
    if (is_boundary(a)) {
      throw std::logic_error("self-loop on a boundary");
    }
    // Simple loop drops; Hadamard loop adds pi to the phase.
    if (kind == WireKind::Hadamard) {
      add_to_phase(a, Phase::pi());
    }
    return;
  }
  auto existing = adjacency_[a].find(b);
  if (existing == adjacency_[a].end()) {
    adjacency_[a].emplace(b, kind);
    adjacency_[b].emplace(a, kind);
    ++wire_count_;
    return;
  }
  if (is_boundary(a) || is_boundary(b)) {
    throw std::logic_error("parallel wire at a boundary");
  }
  const WireKind old = existing->second;
  const bool same_kind = spiders_[a].kind == spiders_[b].kind;
  const bool both_hadamard = old == WireKind::Hadamard && kind == WireKind::Hadamard;
  const bool both_simple = old == WireKind::Simple && kind == WireKind::Simple;
  if (same_kind) {
    if (both_hadamard) {
      remove_wire(a, b);  // Hopf cancellation
    } else if (both_simple) {
      // One Simple wire is enough; fusion later absorbs it.
    } else {
      set_wire_kind(a, b, WireKind::Simple);
      add_to_phase(a, Phase::pi());
    }
  } else {
    if (both_simple) {
      remove_wire(a, b);  // Hopf cancellation
    } else if (both_hadamard) {
      // Keep a single Hadamard wire.
    } else {
      set_wire_kind(a, b, WireKind::Hadamard);
      add_to_phase(a, Phase::pi());
    }
  }
}

void ZxDiagram::remove_wire(SpiderId a, SpiderId b) {
  if (adjacency_[a].erase(b) == 0 || adjacency_[b].erase(a) == 0) {
    throw std::logic_error("removing a wire that does not exist");
  }
  --wire_count_;
}

std::optional<WireKind> ZxDiagram::wire_between(SpiderId a, SpiderId b) const {
  auto it = adjacency_[a].find(b);
  if (it == adjacency_[a].end()) {
    return std::nullopt;
  }
  return it->second;
}

void ZxDiagram::set_wire_kind(SpiderId a, SpiderId b, WireKind kind) {
  adjacency_[a].at(b) = kind;
  adjacency_[b].at(a) = kind;
}

void ZxDiagram::toggle_hadamard_wire(SpiderId a, SpiderId b) {
  auto it = adjacency_[a].find(b);
  if (it == adjacency_[a].end()) {
    adjacency_[a].emplace(b, WireKind::Hadamard);
    adjacency_[b].emplace(a, WireKind::Hadamard);
    ++wire_count_;
    return;
  }
  if (it->second != WireKind::Hadamard) {
    throw std::logic_error("toggling a non-Hadamard wire");
  }
  remove_wire(a, b);
}

bool ZxDiagram::is_interior(SpiderId s) const {
  if (is_boundary(s)) {
    return false;
  }
  for (const auto& [nbr, kind] : adjacency_[s]) {
    if (is_boundary(nbr)) {
      return false;
    }
  }
  return true;
}

void ZxDiagram::remove_spider(SpiderId s) {
  while (!adjacency_[s].empty()) {
    remove_wire(s, adjacency_[s].begin()->first);
  }
  spiders_[s].alive = false;
  --alive_count_;
}

std::size_t ZxDiagram::non_boundary_count() const {
  std::size_t n = 0;
  for (std::size_t s = 0; s < spiders_.size(); ++s) {
    if (spiders_[s].alive && spiders_[s].kind != SpiderKind::Boundary) {
      ++n;
    }
  }
  return n;
}

std::vector<SpiderId> ZxDiagram::spider_ids() const {
  std::vector<SpiderId> ids;
  ids.reserve(alive_count_);
  for (std::size_t s = 0; s < spiders_.size(); ++s) {
    if (spiders_[s].alive) {
      ids.push_back(static_cast<SpiderId>(s));
    }
  }
  return ids;
}

std::size_t ZxDiagram::interior_hadamard_wire_count() const {
  std::size_t n = 0;
  for (std::size_t s = 0; s < spiders_.size(); ++s) {
    if (!spiders_[s].alive || spiders_[s].kind == SpiderKind::Boundary) {
      continue;
    }
    for (const auto& [nbr, kind] : adjacency_[s]) {
      if (nbr > s && !is_boundary(nbr) && kind == WireKind::Hadamard) {
        ++n;
      }
    }
  }
  return n;
}

void ZxDiagram::fuse(SpiderId a, SpiderId b) {
  if (a == b || is_boundary(a) || is_boundary(b) ||
      spiders_[a].kind != spiders_[b].kind) {
    throw std::invalid_argument("fusion requires distinct same-kind spiders");
  }
  auto wire = wire_between(a, b);
  if (!wire || *wire != WireKind::Simple) {
    throw std::invalid_argument("fusion requires a Simple wire");
  }
  add_to_phase(a, phase(b));
  remove_wire(a, b);
  while (!adjacency_[b].empty()) {
    const auto [nbr, kind] = *adjacency_[b].begin();
    remove_wire(b, nbr);
    add_wire(a, nbr, kind);
  }
  spiders_[b].alive = false;
  --alive_count_;
}

void ZxDiagram::color_change(SpiderId s) {
  if (is_boundary(s)) {
    throw std::invalid_argument("cannot color-change a boundary");
  }
  spiders_[s].kind =
      spiders_[s].kind == SpiderKind::Z ? SpiderKind::X : SpiderKind::Z;
  for (auto& [nbr, kind] : adjacency_[s]) {
    const WireKind flipped =
        kind == WireKind::Simple ? WireKind::Hadamard : WireKind::Simple;
    kind = flipped;
    adjacency_[nbr].at(s) = flipped;
  }
}

void ZxDiagram::eliminate_identity(SpiderId s) {
  if (is_boundary(s) || !phase(s).is_zero() || degree(s) != 2) {
    throw std::invalid_argument("not an identity spider");
  }
  auto it = adjacency_[s].begin();
  const auto [u, k1] = *it;
  const auto [w, k2] = *std::next(it);
  remove_wire(s, u);
  remove_wire(s, w);
  const WireKind joined =
      (k1 == WireKind::Hadamard) != (k2 == WireKind::Hadamard)
          ? WireKind::Hadamard
          : WireKind::Simple;
  add_wire(u, w, joined);
  spiders_[s].alive = false;
  --alive_count_;
}

std::string ZxDiagram::dump() const {
  std::string out = "zx-diagram\n";
  out += "spiders:\n";
  for (std::size_t s = 0; s < spiders_.size(); ++s) {
    if (!spiders_[s].alive) {
      continue;
    }
    out += "  " + std::to_string(s) + " ";
    switch (spiders_[s].kind) {
      case SpiderKind::Z:
        out += "Z";
        break;
      case SpiderKind::X:
        out += "X";
        break;
      case SpiderKind::Boundary:
        out += "B";
        break;
    }
    out += " " + spiders_[s].phase.to_string() + "\n";
  }
  out += "wires:\n";
  for (std::size_t s = 0; s < spiders_.size(); ++s) {
    if (!spiders_[s].alive) {
      continue;
    }
    for (const auto& [nbr, kind] : adjacency_[s]) {
      if (nbr > s) {
        out += "  " + std::to_string(s) + " " + std::to_string(nbr) +
               (kind == WireKind::Hadamard ? " H" : " S") + "\n";
      }
    }
  }
  out += "inputs:";
  for (SpiderId s : inputs_) {
    out += " " + std::to_string(s);
  }
  out += "\noutputs:";
  for (SpiderId s : outputs_) {
    out += " " + std::to_string(s);
  }
  out += "\n";
  return out;
}

void ZxDiagram::check_consistency() const {
  for (std::size_t s = 0; s < spiders_.size(); ++s) {
    if (!spiders_[s].alive) {
      if (!adjacency_[s].empty()) {
        throw std::logic_error("dead spider with wires");
      }
      continue;
    }
    for (const auto& [nbr, kind] : adjacency_[s]) {
      if (!spiders_[nbr].alive) {
        throw std::logic_error("wire to a dead spider");
      }
      if (adjacency_[nbr].at(static_cast<SpiderId>(s)) != kind) {
        throw std::logic_error("asymmetric adjacency");
      }
      if (nbr == s) {
        throw std::logic_error("self-loop survived normalization");
      }
    }
    if (spiders_[s].kind == SpiderKind::Boundary) {
      if (adjacency_[s].size() != 1) {
        throw std::logic_error("boundary degree must be 1");
      }
      if (!spiders_[s].phase.is_zero()) {
        throw std::logic_error("boundary with nonzero phase");
      }
    }
  }
}

ZxDiagram circuit_to_zx(const Circuit& circuit) {
  circuit.validate();
  ZxDiagram d;
  std::vector<SpiderId> cur;
  std::vector<WireKind> pending(circuit.num_qubits, WireKind::Simple);
  for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
    cur.push_back(d.add_input_boundary());
  }
  std::vector<SpiderId> outs;
  for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
    outs.push_back(d.add_output_boundary());
  }

  auto splice = [&](std::size_t q, SpiderId spider) {
    d.add_wire(cur[q], spider, pending[q]);
    cur[q] = spider;
    pending[q] = WireKind::Simple;
  };

  for (const Gate& gate : circuit.gates) {
    const Gate g = gate.canonicalized();
    switch (g.kind) {
      case GateKind::RZ:
        splice(g.qubits[0], d.add_spider(SpiderKind::Z, g.phase));
        break;
      case GateKind::Z:
        splice(g.qubits[0], d.add_spider(SpiderKind::Z, Phase::pi()));
        break;
      case GateKind::X:
        splice(g.qubits[0], d.add_spider(SpiderKind::X, Phase::pi()));
        break;
      case GateKind::H:
        pending[g.qubits[0]] = pending[g.qubits[0]] == WireKind::Simple
                                   ? WireKind::Hadamard
                                   : WireKind::Simple;
        break;
      case GateKind::CZ: {
        const SpiderId za = d.add_spider(SpiderKind::Z);
        const SpiderId zb = d.add_spider(SpiderKind::Z);
        splice(g.qubits[0], za);
        splice(g.qubits[1], zb);
        d.add_wire(za, zb, WireKind::Hadamard);
        break;
      }
      case GateKind::CX: {
        const SpiderId zc = d.add_spider(SpiderKind::Z);
        const SpiderId xt = d.add_spider(SpiderKind::X);
        splice(g.qubits[0], zc);
        splice(g.qubits[1], xt);
        d.add_wire(zc, xt, WireKind::Simple);
        break;
      }
      case GateKind::SWAP:
        std::swap(cur[g.qubits[0]], cur[g.qubits[1]]);
        std::swap(pending[g.qubits[0]], pending[g.qubits[1]]);
        break;
      default:
        throw std::logic_error("unexpected gate after canonicalization");
    }
  }
  for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
    d.add_wire(cur[q], outs[q], pending[q]);
  }
  return d;
}

bool is_graph_like(const ZxDiagram& d, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why != nullptr) {
      *why = reason;
    }
    return false;
  };
  for (SpiderId s : d.spider_ids()) {
    if (d.kind(s) == SpiderKind::X) {
      return fail("X spider present");
    }
    if (d.kind(s) == SpiderKind::Boundary) {
      continue;
    }
    for (const auto& [nbr, kind] : d.neighbors(s)) {
      if (!d.is_boundary(nbr) && kind != WireKind::Hadamard) {
        return fail("interior Simple wire present");
      }
    }
  }
  return true;
}

void assert_graph_like(const GraphLikeDiagram& g) {
  g.diagram.check_consistency();
  std::string why;
  if (!is_graph_like(g.diagram, &why)) {
    throw std::logic_error("diagram is not graph-like: " + why);
  }
}

GraphLikeDiagram to_graph_like(ZxDiagram d) {
  for (SpiderId s : d.spider_ids()) {
    if (d.kind(s) == SpiderKind::X) {
      d.color_change(s);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (SpiderId s : d.spider_ids()) {
      if (!d.alive(s) || d.is_boundary(s)) {
        continue;
      }
      // Fuse along a Simple wire to a non-boundary neighbor.
      for (const auto& [nbr, kind] : d.neighbors(s)) {
        if (kind == WireKind::Simple && !d.is_boundary(nbr)) {
          d.fuse(s, nbr);
          changed = true;
          break;
        }
      }
      if (changed) {
        break;
      }
      if (d.phase(s).is_zero() && d.degree(s) == 2) {
        d.eliminate_identity(s);
        changed = true;
        break;
      }
    }
  }
  GraphLikeDiagram result{std::move(d)};
#ifndef NDEBUG
  assert_graph_like(result);
#endif
  return result;
}

}  // namespace zxroute
