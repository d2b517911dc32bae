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

#include "zxroute/extract.hpp"

#include <algorithm>
#include <cassert>

namespace zxroute {

namespace {

constexpr std::size_t kIterationSlack = 64;

// Neighbor classification of a frontier spider, excluding its output.
struct FrontierView {
  std::vector<std::pair<SpiderId, WireKind>> interior;  // non-boundary
  std::vector<std::pair<SpiderId, WireKind>> inputs;    // input boundaries
  std::vector<SpiderId> frontier_wires;                 // other frontier spiders
};

bool in_frontier(const ExtractorState& st, SpiderId s) {
  for (const auto& f : st.frontier) {
    if (f && *f == s) {
      return true;
    }
  }
  return false;
}

FrontierView classify(const ExtractorState& st, std::size_t q) {
  FrontierView view;
  const SpiderId v = *st.frontier[q];
  const SpiderId out = st.diagram.outputs()[q];
  for (const auto& [nbr, kind] : st.diagram.neighbors(v)) {
    if (nbr == out) {
      continue;
    }
    if (st.diagram.is_boundary(nbr)) {
      view.inputs.emplace_back(nbr, kind);
    } else if (in_frontier(st, nbr)) {
      view.frontier_wires.push_back(nbr);
    } else {
      view.interior.emplace_back(nbr, kind);
    }
  }
  return view;
}

// Emits the final input permutation as leading SWAP gates once every line
// is fully extracted.
void resolve_permutation(ExtractorState& st) {
  if (st.permutation_resolved || !st.complete()) {
    return;
  }
  const auto& outputs = st.diagram.outputs();
  const auto& inputs = st.diagram.inputs();
  const std::size_t n = outputs.size();
  std::vector<std::size_t> reads(n);  // output q carries input reads[q]
  for (std::size_t q = 0; q < n; ++q) {
    const auto& nbrs = st.diagram.neighbors(outputs[q]);
    if (nbrs.size() != 1) {
      throw FlowError("output boundary degree is not 1 after extraction");
    }
    const SpiderId b = nbrs.begin()->first;
    auto it = std::find(inputs.begin(), inputs.end(), b);
    if (it == inputs.end()) {
      throw FlowError("output not wired to an input after extraction");
    }
    reads[q] = static_cast<std::size_t>(it - inputs.begin());
  }
  // Build the wire relabeling with SWAPs: wire[p] tracks which input is
  // currently carried at position p; SWAPs are emitted in circuit order and
  // appended to extracted_rev (they sit at the start of the final circuit).
  std::vector<std::size_t> wire(n);
  for (std::size_t p = 0; p < n; ++p) {
    wire[p] = p;
  }
  std::vector<Gate> swaps;
  for (std::size_t q = 0; q < n; ++q) {
    if (wire[q] == reads[q]) {
      continue;
    }
    std::size_t j = q + 1;
    while (j < n && wire[j] != reads[q]) {
      ++j;
    }
    swaps.push_back(Gate::swap(q, j));
    std::swap(wire[q], wire[j]);
  }
  // extracted_rev is reversed into circuit order later, so the swap that
  // must come first in the circuit is appended last.
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    st.extracted_rev.push_back(*it);
  }
  st.permutation_resolved = true;
}

// The Hadamard/advance pass: one advance attempt per qubit, including the
// terminal input-arrival transition, plus the final permutation once every
// line is done. Appends directly to extracted_rev.
void run_advance_pass(ExtractorState& st) {
  const std::size_t n = st.num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (!st.frontier[q]) {
      continue;
    }
    const SpiderId v = *st.frontier[q];
    if (!st.diagram.phase(v).is_zero()) {
      continue;  // became nonzero through a rewrite; next round
    }
    FrontierView view = classify(st, q);
    if (!view.frontier_wires.empty()) {
      continue;
    }
    const SpiderId out = st.diagram.outputs()[q];
    if (view.interior.size() == 1 && view.inputs.empty()) {
      const auto [w, kind] = view.interior[0];
      assert(kind == WireKind::Hadamard);
      if (in_frontier(st, w)) {
        continue;  // claimed by a lower qubit this round
      }
      st.extracted_rev.push_back(Gate::h(q));
      st.diagram.remove_spider(v);
      st.diagram.add_wire(out, w, WireKind::Simple);
      st.frontier[q] = w;
      continue;
    }
    if (view.interior.empty() && view.inputs.size() == 1) {
      const auto [b, kind] = view.inputs[0];
      if (kind == WireKind::Hadamard) {
        st.extracted_rev.push_back(Gate::h(q));
      }
      st.diagram.remove_spider(v);
      st.diagram.add_wire(out, b, WireKind::Simple);
      st.frontier[q] = std::nullopt;
      continue;
    }
    if (view.interior.empty() && view.inputs.empty()) {
      throw FlowError("frontier spider has only its output wire");
    }
    if (view.inputs.size() > 1) {
      throw FlowError("frontier spider wired to several inputs");
    }
  }
  if (st.complete() && !st.permutation_resolved) {
    resolve_permutation(st);
  }
}

// One round of the basic rules, each applied once in deterministic order:
// Phase pass, CZ pass, advance pass. Returns the emitted gates.
std::vector<Gate> run_basic_round(ExtractorState& st) {
  const std::size_t before = st.extracted_rev.size();
  const std::size_t n = st.num_qubits();
  // Phase rule.
  for (std::size_t q = 0; q < n; ++q) {
    if (!st.frontier[q]) {
      continue;
    }
    const SpiderId v = *st.frontier[q];
    if (!st.diagram.phase(v).is_zero()) {
      st.extracted_rev.push_back(Gate::rz(st.diagram.phase(v), q));
      st.diagram.set_phase(v, Phase());
    }
  }
  // CZ rule.
  for (std::size_t q1 = 0; q1 < n; ++q1) {
    if (!st.frontier[q1]) {
      continue;
    }
    for (std::size_t q2 = q1 + 1; q2 < n; ++q2) {
      if (!st.frontier[q2]) {
        continue;
      }
      if (st.diagram.wire_between(*st.frontier[q1], *st.frontier[q2])) {
        st.diagram.remove_wire(*st.frontier[q1], *st.frontier[q2]);
        st.extracted_rev.push_back(Gate::cz(q1, q2));
      }
    }
  }
  run_advance_pass(st);
  return std::vector<Gate>(st.extracted_rev.begin() + before,
                           st.extracted_rev.end());
}

}  // namespace

bool ExtractorState::complete() const {
  for (const auto& f : frontier) {
    if (f.has_value()) {
      return false;
    }
  }
  return true;
}

Circuit ExtractorState::to_circuit() const {
  Circuit c(num_qubits());
  for (auto it = extracted_rev.rbegin(); it != extracted_rev.rend(); ++it) {
    c.append(*it);
  }
  return c;
}

ExtractorState init_extractor(const GraphLikeDiagram& d) {
  const std::size_t n = d.diagram.outputs().size();
  if (n != d.diagram.inputs().size()) {
    throw std::invalid_argument("diagram is not unitary");
  }
  ExtractorState st{d.diagram, {}, {}, false};
  st.frontier.assign(n, std::nullopt);
  for (std::size_t q = 0; q < n; ++q) {
    const SpiderId out = st.diagram.outputs()[q];
    if (st.diagram.degree(out) != 1) {
      throw std::invalid_argument("output boundary degree is not 1");
    }
    const auto [v, kind] = *st.diagram.neighbors(out).begin();
    if (kind == WireKind::Hadamard) {
      st.extracted_rev.push_back(Gate::h(q));
      st.diagram.set_wire_kind(out, v, WireKind::Simple);
    }
    if (st.diagram.is_boundary(v)) {
      const auto& ins = st.diagram.inputs();
      if (std::find(ins.begin(), ins.end(), v) == ins.end()) {
        throw std::invalid_argument("output wired to another output");
      }
      st.frontier[q] = std::nullopt;
    } else {
      st.frontier[q] = v;
    }
  }
  // Distinct frontier spiders per position.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (st.frontier[a] && st.frontier[b] &&
          *st.frontier[a] == *st.frontier[b]) {
        throw FlowError("two outputs share a frontier spider");
      }
    }
  }
  return st;
}

std::vector<Gate> step_basic(ExtractorState& st) {
  std::vector<Gate> emitted;
  const std::size_t guard =
      st.diagram.spider_count() + st.num_qubits() + kIterationSlack;
  for (std::size_t i = 0; i < guard; ++i) {
    ExtractorState before = st;
    std::vector<Gate> round = run_basic_round(st);
    if (round.empty() && before.frontier == st.frontier) {
      return emitted;
    }
    emitted.insert(emitted.end(), round.begin(), round.end());
    if (st.complete() && st.permutation_resolved) {
      return emitted;
    }
  }
  throw FlowError("basic extraction did not converge");
}

namespace {

// Inserts an identity spider on every frontier-input wire whose frontier
// spider still has other work, so the spider can participate in
// elimination without touching the boundary.
void pad_frontier_inputs(ExtractorState& st) {
  const std::size_t n = st.num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (!st.frontier[q]) {
      continue;
    }
    const SpiderId v = *st.frontier[q];
    FrontierView view = classify(st, q);
    if (view.inputs.empty() ||
        (view.interior.empty() && view.frontier_wires.empty() &&
         view.inputs.size() == 1)) {
      continue;  // nothing to pad, or the input-arrival rule will finish it
    }
    for (const auto& [b, kind] : view.inputs) {
      st.diagram.remove_wire(v, b);
      const SpiderId pad = st.diagram.add_spider(SpiderKind::Z);
      st.diagram.add_wire(v, pad, WireKind::Hadamard);
      st.diagram.add_wire(pad, b,
                          kind == WireKind::Hadamard ? WireKind::Simple
                                                     : WireKind::Hadamard);
    }
  }
}

bool frontier_has_input(const ExtractorState& st, std::size_t q) {
  return !classify(st, q).inputs.empty();
}

}  // namespace

BitMatrix frontier_biadjacency(const ExtractorState& st,
                               std::vector<SpiderId>* columns) {
  const std::size_t n = st.num_qubits();
  std::vector<SpiderId> cols;
  for (std::size_t q = 0; q < n; ++q) {
    if (!st.frontier[q]) {
      continue;
    }
    for (const auto& [nbr, kind] : st.diagram.neighbors(*st.frontier[q])) {
      if (!st.diagram.is_boundary(nbr) && !in_frontier(st, nbr)) {
        cols.push_back(nbr);
      }
    }
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  BitMatrix m(n, cols.size());
  for (std::size_t q = 0; q < n; ++q) {
    if (!st.frontier[q]) {
      continue;
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (st.diagram.wire_between(*st.frontier[q], cols[c])) {
        m.set(q, c, true);
      }
    }
  }
  if (columns != nullptr) {
    *columns = std::move(cols);
  }
  return m;
}

void apply_cx(ExtractorState& st, std::size_t control, std::size_t target) {
  if (control == target || control >= st.num_qubits() ||
      target >= st.num_qubits()) {
    throw std::invalid_argument("bad CX operands");
  }
  if (!st.frontier[control] || !st.frontier[target]) {
    throw std::invalid_argument("CX needs frontier spiders on both qubits");
  }
  if (frontier_has_input(st, control) || frontier_has_input(st, target)) {
    throw std::invalid_argument(
        "CX frontier spiders must not touch an input (pad first)");
  }
  const SpiderId fc = *st.frontier[control];
  const SpiderId ft = *st.frontier[target];
  if (st.diagram.wire_between(fc, ft)) {
    throw std::invalid_argument(
        "CX with a frontier wire pending (extract CZs first)");
  }
  // The wire copy is the strong-complementarity push-through, which needs a
  // phase-free target spider. (The control only fuses; its phase is free.)
  if (!st.diagram.phase(ft).is_zero()) {
    throw std::invalid_argument("CX target carries a phase (extract it first)");
  }
  std::vector<SpiderId> targets_nbrs;
  const SpiderId out_t = st.diagram.outputs()[target];
  for (const auto& [nbr, kind] : st.diagram.neighbors(ft)) {
    if (nbr == out_t) {
      continue;
    }
    assert(kind == WireKind::Hadamard);
    targets_nbrs.push_back(nbr);
  }
  for (SpiderId w : targets_nbrs) {
    st.diagram.toggle_hadamard_wire(fc, w);
  }
  st.extracted_rev.push_back(Gate::cx(control, target));
}

namespace {

struct CxOption {
  std::size_t control;
  std::size_t target;
  std::size_t new_control_weight;  // row weight right after the XOR
  long long wire_delta;            // change in interior Hadamard wires
};

// All row additions that either strictly reduce the Hadamard-wire count or
// create a singleton row, on a padded, frontier-wire-free state.
std::vector<CxOption> cx_operations(const ExtractorState& st) {
  std::vector<CxOption> ops;
  const std::size_t n = st.num_qubits();
  for (std::size_t c = 0; c < n; ++c) {
    if (!st.frontier[c] || frontier_has_input(st, c)) {
      continue;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (t == c || !st.frontier[t] || frontier_has_input(st, t) ||
          !st.diagram.phase(*st.frontier[t]).is_zero()) {
        continue;
      }
      const auto& nc = st.diagram.neighbors(*st.frontier[c]);
      const auto& nt = st.diagram.neighbors(*st.frontier[t]);
      std::size_t shared = 0;
      std::size_t t_size = 0;
      for (const auto& [nbr, kind] : nt) {
        if (st.diagram.is_boundary(nbr)) {
          continue;
        }
        ++t_size;
        if (nc.count(nbr) != 0) {
          ++shared;
        }
      }
      std::size_t c_size = 0;
      for (const auto& [nbr, kind] : nc) {
        if (!st.diagram.is_boundary(nbr)) {
          ++c_size;
        }
      }
      const std::size_t new_c = c_size + t_size - 2 * shared;
      if (new_c == 0) {
        continue;  // would disconnect the control spider
      }
      const bool reduces = new_c < c_size;
      const bool singleton = new_c == 1;
      if (reduces || singleton) {
        ops.push_back({c, t, new_c,
                       static_cast<long long>(new_c) -
                           static_cast<long long>(c_size)});
      }
    }
  }
  return ops;
}

// One extraction cycle: Phase pass, CZ pass, optionally one CX, then the
// Hadamard/advance pass. Candidates share the forced phase/CZ cleanup and
// differ in the CX choice (none, or one of the ranked row additions). The
// first entry is the greedy baseline's choice.
std::vector<ExtractionPath> cycle_candidates(const ExtractorState& st,
                                             std::size_t max_branch) {
  const long long wires_before =
      static_cast<long long>(st.diagram.interior_hadamard_wire_count());

  // Forced moves shared by every candidate: phases and CZs.
  ExtractorState cleaned = st;
  std::vector<Gate> cleanup;
  {
    const std::size_t n = cleaned.num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
      if (!cleaned.frontier[q]) {
        continue;
      }
      const SpiderId v = *cleaned.frontier[q];
      if (!cleaned.diagram.phase(v).is_zero()) {
        Gate g = Gate::rz(cleaned.diagram.phase(v), q);
        cleaned.diagram.set_phase(v, Phase());
        cleaned.extracted_rev.push_back(g);
        cleanup.push_back(g);
      }
    }
    for (std::size_t q1 = 0; q1 < n; ++q1) {
      for (std::size_t q2 = q1 + 1; q2 < n; ++q2) {
        if (cleaned.frontier[q1] && cleaned.frontier[q2] &&
            cleaned.diagram.wire_between(*cleaned.frontier[q1],
                                         *cleaned.frontier[q2])) {
          cleaned.diagram.remove_wire(*cleaned.frontier[q1],
                                      *cleaned.frontier[q2]);
          Gate g = Gate::cz(q1, q2);
          cleaned.extracted_rev.push_back(g);
          cleanup.push_back(g);
        }
      }
    }
  }

  auto finish_path = [&](ExtractorState&& state, std::vector<Gate> gates) {
    ExtractionPath p;
    p.gates = std::move(gates);
    p.first_cycle_gates = p.gates;
    p.delta_w = wires_before -
                static_cast<long long>(
                    state.diagram.interior_hadamard_wire_count());
    p.successor = state;
    p.first_cycle_successor = std::move(state);
    p.descriptor = describe_gates(p.gates);
    return p;
  };

  // Runs the advance tail on a copy and reports whether anything happened.
  auto with_advance_tail = [&](ExtractorState state, std::vector<Gate> gates,
                               bool force_progress) {
    const auto frontier_snapshot = state.frontier;
    const bool perm_before = state.permutation_resolved;
    const std::size_t before = state.extracted_rev.size();
    run_advance_pass(state);
    gates.insert(gates.end(), state.extracted_rev.begin() + before,
                 state.extracted_rev.end());
    const bool progressed = !gates.empty() ||
                            state.frontier != frontier_snapshot ||
                            (state.permutation_resolved && !perm_before);
    if (!progressed && force_progress) {
      return std::optional<ExtractionPath>();
    }
    return std::optional<ExtractionPath>(
        finish_path(std::move(state), std::move(gates)));
  };

  std::vector<ExtractionPath> paths;
  // Candidate (i): the pure basic cycle, when it makes progress.
  if (auto p = with_advance_tail(cleaned, cleanup, true)) {
    paths.push_back(std::move(*p));
  }

  // Candidates (ii): one CX inserted before the advance pass.
  if (!cleaned.complete()) {
    ExtractorState padded = cleaned;
    pad_frontier_inputs(padded);
    std::vector<CxOption> ops = cx_operations(padded);
    std::stable_sort(ops.begin(), ops.end(),
                     [](const CxOption& a, const CxOption& b) {
                       if (a.wire_delta != b.wire_delta) {
                         return a.wire_delta < b.wire_delta;
                       }
                       if (a.control != b.control) {
                         return a.control < b.control;
                       }
                       return a.target < b.target;
                     });
    for (const CxOption& op : ops) {
      if (paths.size() >= max_branch) {
        break;
      }
      ExtractorState next = padded;
      apply_cx(next, op.control, op.target);
      std::vector<Gate> gates = cleanup;
      gates.push_back(Gate::cx(op.control, op.target));
      if (auto p = with_advance_tail(std::move(next), std::move(gates),
                                     false)) {
        paths.push_back(std::move(*p));
      }
    }

    if (paths.empty()) {
      // Fallback: full Gauss-Jordan elimination applied lazily until a
      // singleton row appears. This is the operational flow witness.
      ExtractorState fallback = padded;
      std::vector<Gate> gates = cleanup;
      BitMatrix plan = frontier_biadjacency(fallback);
      auto row_ops = plan.eliminate();
      bool unlocked = false;
      for (const auto& [target_row, source_row] : row_ops) {
        apply_cx(fallback, target_row, source_row);
        gates.push_back(Gate::cx(target_row, source_row));
        const BitMatrix now = frontier_biadjacency(fallback);
        for (std::size_t r = 0; r < now.rows(); ++r) {
          if (fallback.frontier[r] && now.singleton_column(r)) {
            unlocked = true;
            break;
          }
        }
        if (unlocked) {
          break;
        }
      }
      if (!unlocked) {
        throw FlowError("diagram lacks extractable flow");
      }
      if (auto p = with_advance_tail(std::move(fallback), std::move(gates),
                                     false)) {
        paths.push_back(std::move(*p));
      }
    }
  }

  if (paths.empty() && !cleaned.complete()) {
    throw FlowError("no extraction cycle available");
  }
  return paths;
}

void expand_paths(const ExtractionPath& root, const ExtractionPath& current,
                  std::size_t depth, std::size_t max_branch,
                  std::vector<ExtractionPath>& leaves) {
  if (depth == 1 ||
      (current.successor.complete() &&
       current.successor.permutation_resolved)) {
    ExtractionPath leaf = current;
    leaf.first_cycle_gates = root.first_cycle_gates;
    leaf.first_cycle_successor = root.first_cycle_successor;
    leaves.push_back(std::move(leaf));
    return;
  }
  std::vector<ExtractionPath> next =
      cycle_candidates(current.successor, max_branch);
  for (ExtractionPath& ext : next) {
    ExtractionPath chained;
    chained.gates = current.gates;
    chained.gates.insert(chained.gates.end(), ext.gates.begin(),
                         ext.gates.end());
    chained.successor = std::move(ext.successor);
    chained.delta_w = current.delta_w + ext.delta_w;
    chained.descriptor = describe_gates(chained.gates);
    expand_paths(root, chained, depth - 1, max_branch, leaves);
  }
}

}  // namespace

ExtractionPath::Descriptor describe_gates(const std::vector<Gate>& gates) {
  ExtractionPath::Descriptor d;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::RZ:
        ++d.rz;
        break;
      case GateKind::H:
        ++d.h;
        break;
      case GateKind::CZ:
        ++d.cz;
        break;
      case GateKind::CX:
        ++d.cx;
        break;
      case GateKind::SWAP:
        ++d.swap;
        break;
      default:
        break;
    }
  }
  return d;
}

std::vector<ExtractionPath> enumerate_paths(const ExtractorState& st,
                                            std::size_t depth,
                                            std::size_t max_branch) {
  if (depth == 0 || max_branch == 0) {
    throw std::invalid_argument("depth and max_branch must be positive");
  }
  std::vector<ExtractionPath> roots = cycle_candidates(st, max_branch);
  if (depth == 1) {
    return roots;
  }
  std::vector<ExtractionPath> leaves;
  for (const ExtractionPath& root : roots) {
    expand_paths(root, root, depth, max_branch, leaves);
  }
  return leaves;
}

std::vector<Gate> step_gauss(ExtractorState& st) {
  std::vector<Gate> emitted;
  const std::size_t guard =
      st.diagram.spider_count() + st.num_qubits() + kIterationSlack;
  for (std::size_t iter = 0; iter < guard; ++iter) {
    if (st.complete()) {
      return emitted;
    }
    ExtractorState probe = st;
    if (!step_basic(probe).empty() || probe.complete()) {
      return emitted;  // a basic rule is unlocked
    }
    std::vector<ExtractionPath> cands = cycle_candidates(st, 1);
    if (cands.empty()) {
      throw FlowError("diagram lacks extractable flow");
    }
    bool any_cx = false;
    pad_frontier_inputs(st);
    for (const Gate& g : cands[0].gates) {
      if (g.kind == GateKind::CX) {
        apply_cx(st, g.qubits[0], g.qubits[1]);
        emitted.push_back(g);
        any_cx = true;
      }
    }
    if (!any_cx) {
      return emitted;
    }
  }
  throw FlowError("elimination did not converge");
}

Circuit extract_baseline(const GraphLikeDiagram& d) {
  ExtractorState st = init_extractor(d);
  const std::size_t guard = 2 * st.diagram.spider_count() +
                            st.diagram.wire_count() + kIterationSlack;
  std::size_t iterations = 0;
  while (!st.complete() || !st.permutation_resolved) {
    if (++iterations > guard) {
      throw FlowError("extraction did not converge");
    }
    std::vector<ExtractionPath> cands = cycle_candidates(st, 1);
    if (cands.empty()) {
      throw FlowError("diagram lacks extractable flow");
    }
    st = std::move(cands[0].first_cycle_successor);
  }
  return st.to_circuit();
}

void check_extractor_invariants(const ExtractorState& st) {
  const auto& outputs = st.diagram.outputs();
  if (st.frontier.size() != outputs.size()) {
    throw std::logic_error("frontier size mismatch");
  }
  for (std::size_t q = 0; q < outputs.size(); ++q) {
    const auto& nbrs = st.diagram.neighbors(outputs[q]);
    if (nbrs.size() != 1) {
      throw std::logic_error("output degree is not 1");
    }
    const SpiderId v = nbrs.begin()->first;
    if (st.frontier[q].has_value()) {
      if (*st.frontier[q] != v) {
        throw std::logic_error("frontier does not match output neighbor");
      }
      if (st.diagram.is_boundary(v)) {
        throw std::logic_error("frontier entry is a boundary");
      }
    } else {
      if (!st.diagram.is_boundary(v)) {
        throw std::logic_error("finished qubit not wired to a boundary");
      }
    }
  }
  for (std::size_t a = 0; a < st.frontier.size(); ++a) {
    for (std::size_t b = a + 1; b < st.frontier.size(); ++b) {
      if (st.frontier[a] && st.frontier[b] &&
          *st.frontier[a] == *st.frontier[b]) {
        throw std::logic_error("duplicate frontier spider");
      }
    }
  }
}

}  // namespace zxroute
