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
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "zxroute/extract.hpp"
#include "zxroute/route.hpp"

namespace zxroute {

constexpr std::size_t kInfiniteWindow = std::numeric_limits<std::size_t>::max();

struct AlternatorConfig {
  double beta = 0.0;                    // edge bias weight
  std::size_t window = kInfiniteWindow; // sliding window s, in gates
  std::size_t depth = 1;                // extraction depth l (lookahead)
  std::size_t max_branch = 8;           // paths per cycle m
  std::uint64_t seed = 0;
  std::size_t jobs = 1;                 // parallel path scoring
};

struct PathScore {
  std::size_t path_index = 0;
  double asp = 0;
  double bias = 0;   // beta * delta_w
  double total = 0;  // asp + bias
  RoutedResult routed_preview;
};

struct AlternatorTrace {
  struct Iteration {
    std::size_t candidate_count = 0;
    std::size_t chosen_index = 0;
    ExtractionPath::Descriptor chosen_descriptor;
    double chosen_asp = 0;
    double chosen_bias = 0;
    double chosen_total = 0;
    long long chosen_delta_w = 0;
    std::size_t cumulative_gates = 0;
  };
  std::vector<Iteration> iterations;
  std::size_t k = 0;  // diagram spider count at start
  std::size_t m = 0;  // branch budget
  std::size_t evaluations = 0;

  std::string to_json_lines() const;
};

/// Scores one candidate path: routes prefix + path gates from the carried
/// mapping and adds the edge bias. Pure and deterministic.
PathScore score_path(const std::vector<Gate>& prefix,
                     const ExtractionPath& path, const HardwareModel& hw,
                     const AlternatorConfig& cfg, const Mapping& carried,
                     std::size_t path_index, std::size_t num_qubits);

/// The alternating loop: enumerate candidate cycles, score them against the
/// hardware, commit the best first cycle, repeat; finally re-routes the
/// complete circuit from the initial mapping.
std::pair<RoutedResult, AlternatorTrace> alternating_extract(
    const GraphLikeDiagram& d, const HardwareModel& hw,
    const AlternatorConfig& cfg);

struct ComparisonRecord {
  RoutedResult baseline;
  RoutedResult alternating;
  Circuit baseline_circuit;  // pre-routing, logical
  double delta_fidelity = 0;
  AlternatorTrace trace;
};

/// Runs route(extract_baseline(d)) and alternating_extract on the same
/// hardware and reports both ASPs.
ComparisonRecord compare_to_baseline(const GraphLikeDiagram& d,
                                     const HardwareModel& hw,
                                     const AlternatorConfig& cfg);

struct SweepCell {
  std::size_t circuit_index = 0;
  double beta = 0;
  std::size_t window = kInfiniteWindow;
  std::size_t depth = 1;
  double asp_base = 0;
  double asp_alt = 0;
  double delta_fidelity = 0;
  std::size_t swaps_base = 0;
  std::size_t swaps_alt = 0;
  std::size_t twoq_base = 0;
  std::size_t twoq_alt = 0;
  double wall_time_ms = 0;
};

/// Full-factorial parameter sweep over a diagram set.
std::vector<SweepCell> sweep(const std::vector<GraphLikeDiagram>& diagrams,
                             const HardwareModel& hw,
                             const std::vector<double>& beta_values,
                             const std::vector<std::size_t>& window_values,
                             const std::vector<std::size_t>& depth_values,
                             std::size_t max_branch, std::size_t jobs = 1);

}  // namespace zxroute
