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

#include "zxroute/alternator.hpp"

#include <random>

#include <stdexcept>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "zxroute/bench.hpp"
#include "zxroute/random_circuit.hpp"
#include "zxroute/simulator.hpp"

using namespace zxroute;

TEST_CASE("score_path adds the edge bias exactly") {
  const Circuit c = random_clifford_t(4, 25, 0.3, 0.3, 99);
  const GraphLikeDiagram g = pipeline(c);
  ExtractorState st = init_extractor(g);
  const auto paths = enumerate_paths(st, 1, 4);
  REQUIRE(!paths.empty());
  const HardwareModel hw = grid_model(1, 4);
  for (double beta : {0.0, 5e-5, 5e-4, 1e-3, 3e-3, 5e-3, 0.01}) {
    AlternatorConfig cfg;
    cfg.beta = beta;
    const PathScore s = score_path(st.extracted_rev, paths[0], hw, cfg,
                                   Mapping::identity(4), 0, 4);
    CHECK(s.bias == beta * static_cast<double>(paths[0].delta_w));
    CHECK(s.total == s.asp + s.bias);
  }
}

TEST_CASE("argmax delta_w is monotone in beta on frozen candidate sets") {
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> asp_dist(0.2, 1.0);
  std::uniform_int_distribution<int> dw_dist(0, 12);
  const std::vector<double> betas = {0.0,  5e-5, 5e-4, 1e-3,
                                     3e-3, 5e-3, 0.01};
  for (int set = 0; set < 10; ++set) {
    std::vector<std::pair<double, int>> candidates;  // (asp, delta_w)
    for (int i = 0; i < 6; ++i) {
      candidates.push_back({asp_dist(rng), dw_dist(rng)});
    }
    int last_dw = -1;
    for (double beta : betas) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double ti = candidates[i].first + beta * candidates[i].second;
        const double tb =
            candidates[best].first + beta * candidates[best].second;
        if (ti > tb || (ti == tb &&
                        candidates[i].second > candidates[best].second)) {
          best = i;
        }
      }
      CHECK(candidates[best].second >= last_dw);
      last_dw = candidates[best].second;
    }
  }
}

TEST_CASE("single-branch config reproduces the baseline pipeline") {
  const HardwareModel hw = grid_model(2, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_clifford_t(5, 40, 0.3, 0.3, 12'000 + seed);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig cfg;
    cfg.max_branch = 1;
    const ComparisonRecord rec = compare_to_baseline(g, hw, cfg);
    CAPTURE(seed);
    CHECK(rec.alternating.circuit == rec.baseline.circuit);
    CHECK(rec.delta_fidelity == 0.0);
  }
}

TEST_CASE("alternating output stays equivalent to the source") {
  const HardwareModel hw = grid_model(2, 3);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Circuit c = random_clifford_t(6, 30, 0.3, 0.3, 13'000 + seed);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig cfg;
    cfg.max_branch = 4;
    auto [routed, trace] = alternating_extract(g, hw, cfg);
    CAPTURE(seed);
    CHECK(hardware_legal(routed.circuit, hw));
    CHECK(equivalent_up_to_permutation(
        routed.circuit, c, routed_permutation(routed, 6), 1e-8));
  }
}

TEST_CASE("deeper lookahead also preserves semantics") {
  const HardwareModel hw = grid_model(2, 2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Circuit c = random_clifford_t(4, 20, 0.3, 0.3, 14'000 + seed);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig cfg;
    cfg.max_branch = 3;
    cfg.depth = 2;
    auto [routed, trace] = alternating_extract(g, hw, cfg);
    CHECK(equivalent_up_to_permutation(
        routed.circuit, c, routed_permutation(routed, 4), 1e-8));
    CHECK(trace.evaluations <= trace.k * cfg.max_branch * cfg.max_branch);
  }
}

TEST_CASE("evaluation count stays within the k*m budget") {
  const HardwareModel hw = grid_model(2, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_clifford_t(6, 50, 0.3, 0.3, 15'000 + seed);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig cfg;
    cfg.max_branch = 8;
    auto [routed, trace] = alternating_extract(g, hw, cfg);
    CHECK(trace.evaluations <= trace.k * trace.m);
    CHECK(trace.iterations.size() <= trace.k);
    for (const auto& it : trace.iterations) {
      CHECK(it.candidate_count <= cfg.max_branch);
    }
  }
}

TEST_CASE("parallel and serial scoring pick identical paths") {
  const HardwareModel hw = grid_model(2, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Circuit c = random_clifford_t(6, 40, 0.3, 0.3, 16'000 + seed);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig serial;
    serial.max_branch = 6;
    serial.jobs = 1;
    AlternatorConfig parallel = serial;
    parallel.jobs = 4;
    auto [rs, ts] = alternating_extract(g, hw, serial);
    auto [rp, tp] = alternating_extract(g, hw, parallel);
    CHECK(rs.circuit == rp.circuit);
    CHECK(rs.asp == rp.asp);
    REQUIRE(ts.iterations.size() == tp.iterations.size());
    for (std::size_t i = 0; i < ts.iterations.size(); ++i) {
      CHECK(ts.iterations[i].chosen_index == tp.iterations[i].chosen_index);
    }
  }
}

TEST_CASE("finite windows route from the carried mapping") {
  const HardwareModel hw = grid_model(2, 3);
  const Circuit c = random_clifford_t(6, 40, 0.3, 0.3, 17'000);
  const GraphLikeDiagram g = pipeline(c);
  for (std::size_t window : {std::size_t{0}, std::size_t{5},
                             std::size_t{20}, kInfiniteWindow}) {
    AlternatorConfig cfg;
    cfg.max_branch = 4;
    cfg.window = window;
    auto [routed, trace] = alternating_extract(g, hw, cfg);
    CHECK(equivalent_up_to_permutation(
        routed.circuit, c, routed_permutation(routed, 6), 1e-8));
  }
}

TEST_CASE("sweep emits one cell per grid point") {
  const HardwareModel hw = grid_model(2, 3);
  std::vector<GraphLikeDiagram> diagrams;
  diagrams.push_back(pipeline(random_clifford_t(5, 30, 0.3, 0.3, 18'000)));
  const auto cells = sweep(diagrams, hw, {0.0, 1e-3}, {kInfiniteWindow},
                           {1}, 4);
  CHECK(cells.size() == 2);
  for (const auto& cell : cells) {
    CHECK(cell.asp_base > 0);
    CHECK(cell.asp_alt > 0);
    CHECK(cell.delta_fidelity ==
          doctest::Approx((cell.asp_alt - cell.asp_base) / cell.asp_base));
  }
}

TEST_CASE("trace renders as json lines") {
  const HardwareModel hw = grid_model(2, 2);
  const Circuit c = random_clifford_t(4, 20, 0.3, 0.3, 19'000);
  AlternatorConfig cfg;
  cfg.max_branch = 2;
  auto [routed, trace] = alternating_extract(pipeline(c), hw, cfg);
  const std::string lines = trace.to_json_lines();
  CHECK(lines.find("\"candidates\"") != std::string::npos);
  CHECK(std::count(lines.begin(), lines.end(), '\n') ==
        static_cast<long>(trace.iterations.size()));
}
