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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zxroute/circuit.hpp"
#include "zxroute/phase.hpp"

namespace zxroute {

using SpiderId = std::uint32_t;

enum class SpiderKind : std::uint8_t { Z, X, Boundary };
enum class WireKind : std::uint8_t { Simple, Hadamard };

/// Undirected multigraph of spiders with typed wires. Self-loops and
/// parallel wires are normalized away eagerly on insertion, so the stored
/// graph always has at most one wire per spider pair and no loops. Spider
/// ids are stable: they are never reused within one diagram lifetime.
class ZxDiagram {
 public:
  SpiderId add_spider(SpiderKind kind, Phase phase = Phase());
  SpiderId add_input_boundary();
  SpiderId add_output_boundary();

  /// Inserts a wire, applying the local normalization rules: self-loops
  /// resolve (Hadamard loop adds pi to the phase), parallel Hadamard wires
  /// between same-kind spiders cancel, parallel Simple wires between
  /// different-kind spiders cancel, and mixed parallels collapse to a single
  /// wire plus a pi phase shift.
  void add_wire(SpiderId a, SpiderId b, WireKind kind);
  void remove_wire(SpiderId a, SpiderId b);
  std::optional<WireKind> wire_between(SpiderId a, SpiderId b) const;
  void set_wire_kind(SpiderId a, SpiderId b, WireKind kind);

  /// Removes a wire if present, otherwise adds a Hadamard wire.
  void toggle_hadamard_wire(SpiderId a, SpiderId b);

  bool alive(SpiderId s) const { return spiders_[s].alive; }
  SpiderKind kind(SpiderId s) const { return spiders_[s].kind; }
  bool is_boundary(SpiderId s) const {
    return spiders_[s].kind == SpiderKind::Boundary;
  }
  Phase phase(SpiderId s) const { return spiders_[s].phase; }
  void set_phase(SpiderId s, Phase phase) { spiders_[s].phase = phase; }
  void add_to_phase(SpiderId s, Phase delta) {
    spiders_[s].phase = spiders_[s].phase + delta;
  }

  std::size_t degree(SpiderId s) const { return adjacency_[s].size(); }
  const std::map<SpiderId, WireKind>& neighbors(SpiderId s) const {
    return adjacency_[s];
  }
  /// True when s has no Boundary neighbor.
  bool is_interior(SpiderId s) const;

  /// Removes an isolated or to-be-dropped spider together with its wires.
  void remove_spider(SpiderId s);

  const std::vector<SpiderId>& inputs() const { return inputs_; }
  const std::vector<SpiderId>& outputs() const { return outputs_; }

  std::size_t id_bound() const { return spiders_.size(); }
  std::size_t spider_count() const { return alive_count_; }
  std::size_t non_boundary_count() const;
  std::size_t wire_count() const { return wire_count_; }
  std::vector<SpiderId> spider_ids() const;

  /// Hadamard wires between two non-Boundary spiders.
  std::size_t interior_hadamard_wire_count() const;

  /// Merges b into a. Both must be same-kind non-Boundary spiders joined by
  /// a Simple wire. Phases add; b's wires transfer to a with normalization.
  void fuse(SpiderId a, SpiderId b);

  /// Flips spider color and toggles every incident wire kind.
  void color_change(SpiderId s);

  /// Removes a phase-0 degree-2 non-Boundary spider, joining its neighbors
  /// with the composite wire kind.
  void eliminate_identity(SpiderId s);

  /// Deterministic text dump (sorted spiders, sorted wires) for golden tests.
  std::string dump() const;

  void check_consistency() const;

 private:
  struct Spider {
    SpiderKind kind;
    Phase phase;
    bool alive;
  };

  std::vector<Spider> spiders_;
  std::vector<std::map<SpiderId, WireKind>> adjacency_;
  std::vector<SpiderId> inputs_;
  std::vector<SpiderId> outputs_;
  std::size_t wire_count_ = 0;
  std::size_t alive_count_ = 0;
};

/// A ZxDiagram satisfying the graph-like conditions: all non-Boundary
/// spiders are Z, all interior wires are Hadamard, no self-loops or
/// parallels. Boundary wires may carry a Hadamard marker.
struct GraphLikeDiagram {
  ZxDiagram diagram;

  std::size_t hadamard_wire_count() const {
    return diagram.interior_hadamard_wire_count();
  }
};

/// Translates a circuit into a ZX diagram whose linear map equals the
/// circuit unitary up to a global scalar.
ZxDiagram circuit_to_zx(const Circuit& circuit);

/// Color-changes X spiders away, fuses Simple-wired pairs and removes
/// identity spiders until the graph-like invariants hold.
GraphLikeDiagram to_graph_like(ZxDiagram diagram);

bool is_graph_like(const ZxDiagram& diagram, std::string* why = nullptr);
void assert_graph_like(const GraphLikeDiagram& diagram);

}  // namespace zxroute
