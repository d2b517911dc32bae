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

#include <stdexcept>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "zxroute/random_circuit.hpp"

using namespace zxroute;
using zxroute::testing::extracts_to;
using zxroute::testing::grover_2q;

namespace {

GraphLikeDiagram diagram_of(const Circuit& c) {
  return to_graph_like(circuit_to_zx(c));
}

}  // namespace

TEST_CASE("init on the empty circuit is already complete") {
  const ExtractorState st = init_extractor(diagram_of(Circuit(3)));
  CHECK(st.complete());
  CHECK(st.frontier.size() == 3);
}

TEST_CASE("init emits output Hadamard markers") {
  Circuit c(1);
  c.append(Gate::h(0));
  ExtractorState st = init_extractor(diagram_of(c));
  REQUIRE(st.extracted_rev.size() == 1);
  CHECK(st.extracted_rev[0] == Gate::h(0));
  CHECK(st.complete());
}

TEST_CASE("frontier size equals qubit count on random diagrams") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_clifford_t(4, 25, 0.3, 0.3, seed);
    ExtractorState st = init_extractor(diagram_of(c));
    CHECK(st.frontier.size() == 4);
    check_extractor_invariants(st);
  }
}

TEST_CASE("step_basic extracts phases, czs and hadamards") {
  // in --- s(pi/4) --H-- t(0) --- out wiring, one qubit:
  Circuit c(1);
  c.append(Gate::t(0));
  c.append(Gate::h(0));
  c.append(Gate::s(0));
  ExtractorState st = init_extractor(diagram_of(c));
  const std::vector<Gate> emitted = step_basic(st);
  CHECK(st.complete());
  const Circuit out = st.to_circuit();
  CHECK(equivalent_up_to_phase(out, c, 1e-10));
}

TEST_CASE("step_basic is a no-op on a stuck frontier") {
  // Both frontier spiders see two interior neighbors; no basic rule fires.
  Circuit c(2);
  c.append(Gate::cz(0, 1));
  c.append(Gate::h(0));
  c.append(Gate::h(1));
  c.append(Gate::cz(0, 1));
  c.append(Gate::h(0));
  c.append(Gate::h(1));
  c.append(Gate::cz(0, 1));
  ExtractorState st = init_extractor(diagram_of(c));
  step_basic(st);  // drain whatever applies
  const ExtractorState snapshot = st;
  const std::vector<Gate> again = step_basic(st);
  CHECK(again.empty());
  CHECK(st.extracted_rev == snapshot.extracted_rev);
}

TEST_CASE("biadjacency matches wires and rank oracle") {
  const Circuit c = random_clifford_t(4, 30, 0.2, 0.4, 77);
  ExtractorState st = init_extractor(diagram_of(c));
  step_basic(st);
  std::vector<SpiderId> cols;
  const BitMatrix m = frontier_biadjacency(st, &cols);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == cols.size());
  for (std::size_t q = 0; q < 4; ++q) {
    if (!st.frontier[q]) {
      continue;
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const bool wired =
          st.diagram.wire_between(*st.frontier[q], cols[j]).has_value();
      CHECK(m.get(q, j) == wired);
    }
  }
  CHECK(m.rank() <= std::min(m.rows(), m.cols()));
}

TEST_CASE("fully advanced state has a zero-width matrix") {
  ExtractorState st = init_extractor(diagram_of(Circuit(2)));
  const BitMatrix m = frontier_biadjacency(st);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 0);
}

TEST_CASE("apply_cx is the row xor of the biadjacency") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = random_clifford_t(4, 30, 0.2, 0.4, 1000 + seed);
    ExtractorState st = init_extractor(diagram_of(c));
    step_basic(st);
    if (st.complete()) {
      continue;
    }
    // Pick the first eligible pair.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < 4 && !pair; ++a) {
      for (std::size_t b = 0; b < 4 && !pair; ++b) {
        if (a == b || !st.frontier[a] || !st.frontier[b]) {
          continue;
        }
        bool input_adjacent = false;
        for (const auto& [nbr, kind] :
             st.diagram.neighbors(*st.frontier[a])) {
          if (st.diagram.is_boundary(nbr) &&
              nbr != st.diagram.outputs()[a]) {
            input_adjacent = true;
          }
        }
        for (const auto& [nbr, kind] :
             st.diagram.neighbors(*st.frontier[b])) {
          if (st.diagram.is_boundary(nbr) &&
              nbr != st.diagram.outputs()[b]) {
            input_adjacent = true;
          }
        }
        if (!input_adjacent) {
          pair = {a, b};
        }
      }
    }
    if (!pair) {
      continue;
    }
    std::vector<SpiderId> cols_before;
    BitMatrix before = frontier_biadjacency(st, &cols_before);
    ExtractorState applied = st;
    apply_cx(applied, pair->first, pair->second);
    before.xor_row(pair->first, pair->second);

    // Columns may shrink when wires cancel; compare via wire lookups.
    for (std::size_t j = 0; j < cols_before.size(); ++j) {
      const bool expected = before.get(pair->first, j);
      const bool actual = applied.diagram
                              .wire_between(*applied.frontier[pair->first],
                                            cols_before[j])
                              .has_value();
      CHECK(expected == actual);
    }

    // XOR involution: applying the same CX twice restores the wires.
    apply_cx(applied, pair->first, pair->second);
    std::vector<SpiderId> cols_after;
    const BitMatrix restored = frontier_biadjacency(applied, &cols_after);
    CHECK(cols_after == cols_before);
    CHECK(restored == frontier_biadjacency(st));
  }
}

TEST_CASE("baseline extraction of the Grover circuit matches the oracle") {
  const Circuit grover = grover_2q();
  CHECK(extracts_to(diagram_of(grover), grover));
}

TEST_CASE("baseline extraction round-trips random circuits") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Circuit c = random_clifford_t(n, 20 + (seed % 3) * 10, 0.3, 0.3,
                                        9000 + seed);
    CAPTURE(seed);
    CHECK(extracts_to(diagram_of(c), c));
  }
}

TEST_CASE("extraction handles permuting circuits") {
  Circuit c(3);
  c.append(Gate::swap(0, 2));
  c.append(Gate::cx(0, 1));
  c.append(Gate::swap(1, 2));
  CHECK(extracts_to(diagram_of(c), c));

  Circuit lone(2);
  lone.append(Gate::swap(0, 1));
  CHECK(extracts_to(diagram_of(lone), lone));
}

TEST_CASE("step_gauss emits nothing when a basic rule applies") {
  Circuit c(1);
  c.append(Gate::t(0));
  ExtractorState st = init_extractor(diagram_of(c));
  CHECK(step_gauss(st).empty());
}

TEST_CASE("enumerate_paths yields at most max_branch candidates") {
  const Circuit c = random_clifford_t(5, 40, 0.3, 0.4, 4242);
  ExtractorState st = init_extractor(diagram_of(c));
  for (std::size_t m : {1, 2, 4, 8}) {
    const auto paths = enumerate_paths(st, 1, m);
    CHECK(!paths.empty());
    CHECK(paths.size() <= m);
    for (const auto& p : paths) {
      check_extractor_invariants(p.successor);
      const long long expected =
          static_cast<long long>(
              st.diagram.interior_hadamard_wire_count()) -
          static_cast<long long>(
              p.successor.diagram.interior_hadamard_wire_count());
      CHECK(p.delta_w == expected);
    }
  }
}

TEST_CASE("depth-2 enumeration bounds the leaf count by m^2") {
  const Circuit c = random_clifford_t(4, 30, 0.3, 0.4, 555);
  ExtractorState st = init_extractor(diagram_of(c));
  const auto paths = enumerate_paths(st, 2, 3);
  CHECK(!paths.empty());
  CHECK(paths.size() <= 9);
  for (const auto& p : paths) {
    CHECK(p.first_cycle_gates.size() <= p.gates.size());
  }
}

TEST_CASE("single-branch enumeration commits to the baseline sequence") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Circuit c = random_clifford_t(4, 30, 0.3, 0.3, 31000 + seed);
    const GraphLikeDiagram g = diagram_of(c);
    const Circuit baseline = extract_baseline(g);

    ExtractorState st = init_extractor(g);
    const std::size_t guard = st.diagram.spider_count() + 100;
    std::size_t iterations = 0;
    while (!st.complete() || !st.permutation_resolved) {
      REQUIRE(iterations++ < guard);
      auto paths = enumerate_paths(st, 1, 1);
      REQUIRE(!paths.empty());
      st = std::move(paths[0].first_cycle_successor);
    }
    CHECK(st.to_circuit() == baseline);
  }
}

TEST_CASE("extraction keeps the round-trip invariant at every state") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Circuit c = random_clifford_t(3, 18, 0.3, 0.3, 7100 + seed);
    const GraphLikeDiagram g = diagram_of(c);
    ExtractorState st = init_extractor(g);
    std::size_t guard = st.diagram.spider_count() + 50;
    while ((!st.complete() || !st.permutation_resolved) && guard-- > 0) {
      auto paths = enumerate_paths(st, 1, 2);
      REQUIRE(!paths.empty());
      st = std::move(paths.back().first_cycle_successor);
      // Invariant: reversed extracted gates composed with extraction of the
      // remaining diagram reproduce the source.
      if (!st.complete()) {
        GraphLikeDiagram rest{st.diagram};
        ExtractorState* probe = &st;
        (void)probe;
        Circuit remainder = extract_baseline(rest);
        Circuit total(c.num_qubits);
        for (const Gate& gate : remainder.gates) {
          total.append(gate);
        }
        for (auto it = st.extracted_rev.rbegin();
             it != st.extracted_rev.rend(); ++it) {
          total.append(*it);
        }
        CHECK(equivalent_up_to_phase(total, c, 1e-8));
      }
    }
    CHECK(st.complete());
  }
}
