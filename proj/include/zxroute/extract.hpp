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

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zxroute/bit_matrix.hpp"
#include "zxroute/zx_diagram.hpp"

namespace zxroute {

/// The diagram admitted no further extraction step: the operational flow
/// witness (elimination producing a singleton row) failed.
class FlowError : public std::runtime_error {
 public:
  explicit FlowError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Extraction walks from the outputs toward the inputs; emitted gates are
/// collected in reverse circuit order. frontier[q] holds the spider
/// adjacent to output q, or nullopt once that qubit line is fully
/// extracted (output wired straight to an input).
struct ExtractorState {
  ZxDiagram diagram;
  std::vector<std::optional<SpiderId>> frontier;
  std::vector<Gate> extracted_rev;
  bool permutation_resolved = false;

  std::size_t num_qubits() const { return frontier.size(); }
  bool complete() const;

  /// Final circuit: permutation SWAPs first, then the extracted gates in
  /// circuit order.
  Circuit to_circuit() const;
};

ExtractorState init_extractor(const GraphLikeDiagram& d);

/// Applies the Phase, CZ and Hadamard rules exhaustively (including the
/// terminal input-arrival transitions) in deterministic qubit order.
/// Returns the emitted gates; no-op when no rule applies.
std::vector<Gate> step_basic(ExtractorState& st);

/// Biadjacency between frontier spiders (rows, one per qubit position) and
/// their non-frontier interior neighbors (columns in ascending spider id).
/// The column ids are reported through `columns` when given.
BitMatrix frontier_biadjacency(const ExtractorState& st,
                               std::vector<SpiderId>* columns = nullptr);

/// Emits CX(control, target) and XORs the target frontier spider's wire set
/// into the control's. Both positions must hold frontier spiders without
/// input wires.
void apply_cx(ExtractorState& st, std::size_t control, std::size_t target);

/// When no basic rule applies, inserts the CX gates the greedy elimination
/// policy chooses until a basic rule is unlocked (or extraction completes).
/// Throws FlowError if elimination cannot produce a singleton row.
std::vector<Gate> step_gauss(ExtractorState& st);

/// Full extraction: step_basic/step_gauss until only boundaries remain,
/// then the final input permutation as explicit SWAP gates.
Circuit extract_baseline(const GraphLikeDiagram& d);

/// One candidate extraction cycle (or a chain of `depth` cycles): emitted
/// gates, successor state and the Hadamard-wire reduction.
struct ExtractionPath {
  struct Descriptor {
    std::size_t rz = 0;
    std::size_t h = 0;
    std::size_t cz = 0;
    std::size_t cx = 0;
    std::size_t swap = 0;
    std::size_t two_qubit() const { return cz + cx + swap; }
  };

  std::vector<Gate> gates;  // extraction order, whole path
  std::vector<Gate> first_cycle_gates;
  ExtractorState successor;
  ExtractorState first_cycle_successor;
  long long delta_w = 0;  // Hadamard-wire reduction over the whole path
  Descriptor descriptor;
};

/// Generates up to max_branch single-cycle candidates: the pure basic-rule
/// cycle when it makes progress, plus CX-led cycles ranked by wire
/// reduction. With depth > 1 each candidate is expanded recursively into up
/// to max_branch^depth leaf paths.
std::vector<ExtractionPath> enumerate_paths(const ExtractorState& st,
                                            std::size_t depth,
                                            std::size_t max_branch);

ExtractionPath::Descriptor describe_gates(const std::vector<Gate>& gates);

/// Test support: validates the ExtractorState bookkeeping against the
/// diagram (frontier matches output neighborhoods, one spider per qubit).
void check_extractor_invariants(const ExtractorState& st);

}  // namespace zxroute
