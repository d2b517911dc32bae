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

#include <chrono>
#include <thread>

#include "json.hpp"

namespace zxroute {

namespace {

constexpr std::size_t kIterationSlack = 64;

// Routing the committed prefix of the extraction stream gives the mapping
// state at the window start.
Mapping carried_mapping(const std::vector<Gate>& stream, std::size_t window,
                        std::size_t num_qubits, const HardwareModel& hw) {
  const Mapping initial = Mapping::identity(num_qubits);
  if (window == kInfiniteWindow || stream.size() <= window) {
    return initial;
  }
  Circuit head(num_qubits);
  for (std::size_t i = 0; i + window < stream.size(); ++i) {
    head.append(stream[i]);
  }
  RoutedResult routed = route(head, hw, initial);
  Mapping carried;
  carried.log_to_phys.assign(
      routed.final_mapping.log_to_phys.begin(),
      routed.final_mapping.log_to_phys.begin() + num_qubits);
  return carried;
}

std::vector<Gate> window_gates(const std::vector<Gate>& stream,
                               std::size_t window) {
  if (window == kInfiniteWindow || stream.size() <= window) {
    return stream;
  }
  return std::vector<Gate>(stream.end() - window, stream.end());
}

}  // namespace

PathScore score_path(const std::vector<Gate>& prefix,
                     const ExtractionPath& path, const HardwareModel& hw,
                     const AlternatorConfig& cfg, const Mapping& carried,
                     std::size_t path_index, std::size_t num_qubits) {
  Circuit eval(num_qubits);
  for (const Gate& g : prefix) {
    eval.append(g);
  }
  for (const Gate& g : path.gates) {
    eval.append(g);
  }
  PathScore score;
  score.path_index = path_index;
  score.routed_preview = route(eval, hw, carried);
  score.asp = score.routed_preview.asp;
  score.bias = cfg.beta * static_cast<double>(path.delta_w);
  score.total = score.asp + score.bias;
  return score;
}

std::pair<RoutedResult, AlternatorTrace> alternating_extract(
    const GraphLikeDiagram& d, const HardwareModel& hw,
    const AlternatorConfig& cfg) {
  if (cfg.depth == 0 || cfg.max_branch == 0) {
    throw std::invalid_argument("depth and max_branch must be positive");
  }
  const std::size_t n = d.diagram.outputs().size();
  if (n > hw.num_physical()) {
    throw std::invalid_argument("more logical than physical qubits");
  }

  ExtractorState st = init_extractor(d);
  AlternatorTrace trace;
  trace.k = d.diagram.spider_count();
  trace.m = cfg.max_branch;

  const std::size_t iteration_cap = trace.k + n + kIterationSlack;
  while (!st.complete() || !st.permutation_resolved) {
    if (trace.iterations.size() >= iteration_cap) {
      throw FlowError("alternating extraction exceeded the iteration cap");
    }
    std::vector<ExtractionPath> paths =
        enumerate_paths(st, cfg.depth, cfg.max_branch);
    if (paths.empty()) {
      throw FlowError("no extraction path available");
    }
    trace.evaluations += paths.size();

    const std::vector<Gate> prefix = window_gates(st.extracted_rev, cfg.window);
    const Mapping carried =
        carried_mapping(st.extracted_rev, cfg.window, n, hw);

    std::vector<PathScore> scores(paths.size());
    if (cfg.jobs <= 1 || paths.size() == 1) {
      for (std::size_t i = 0; i < paths.size(); ++i) {
        scores[i] = score_path(prefix, paths[i], hw, cfg, carried, i, n);
      }
    } else {
      const std::size_t workers = std::min(cfg.jobs, paths.size());
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
          for (std::size_t i = t; i < paths.size(); i += workers) {
            scores[i] = score_path(prefix, paths[i], hw, cfg, carried, i, n);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
      if (scores[i].total > scores[best].total ||
          (scores[i].total == scores[best].total &&
           paths[i].delta_w > paths[best].delta_w)) {
        best = i;
      }
    }

    AlternatorTrace::Iteration it;
    it.candidate_count = paths.size();
    it.chosen_index = best;
    it.chosen_descriptor = describe_gates(paths[best].first_cycle_gates);
    it.chosen_asp = scores[best].asp;
    it.chosen_bias = scores[best].bias;
    it.chosen_total = scores[best].total;
    it.chosen_delta_w = paths[best].delta_w;
    st = std::move(paths[best].first_cycle_successor);
    it.cumulative_gates = st.extracted_rev.size();
    trace.iterations.push_back(it);
  }

  const Circuit committed = st.to_circuit();
  RoutedResult final_result = route(committed, hw, Mapping::identity(n));
  return {std::move(final_result), std::move(trace)};
}

ComparisonRecord compare_to_baseline(const GraphLikeDiagram& d,
                                     const HardwareModel& hw,
                                     const AlternatorConfig& cfg) {
  ComparisonRecord record;
  record.baseline_circuit = extract_baseline(d);
  record.baseline =
      route(record.baseline_circuit, hw,
            Mapping::identity(record.baseline_circuit.num_qubits));
  auto [routed, trace] = alternating_extract(d, hw, cfg);
  record.alternating = std::move(routed);
  record.trace = std::move(trace);
  record.delta_fidelity =
      delta_fidelity(record.alternating.asp, record.baseline.asp);
  return record;
}

std::string AlternatorTrace::to_json_lines() const {
  std::string out;
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    const auto& it = iterations[i];
    nlohmann::json j{
        {"iteration", i},
        {"candidates", it.candidate_count},
        {"chosen_index", it.chosen_index},
        {"chosen", {{"rz", it.chosen_descriptor.rz},
                    {"h", it.chosen_descriptor.h},
                    {"cz", it.chosen_descriptor.cz},
                    {"cx", it.chosen_descriptor.cx},
                    {"swap", it.chosen_descriptor.swap}}},
        {"asp", it.chosen_asp},
        {"bias", it.chosen_bias},
        {"total", it.chosen_total},
        {"delta_w", it.chosen_delta_w},
        {"cumulative_gates", it.cumulative_gates},
    };
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::vector<SweepCell> sweep(const std::vector<GraphLikeDiagram>& diagrams,
                             const HardwareModel& hw,
                             const std::vector<double>& beta_values,
                             const std::vector<std::size_t>& window_values,
                             const std::vector<std::size_t>& depth_values,
                             std::size_t max_branch, std::size_t jobs) {
  if (diagrams.empty() || beta_values.empty() || window_values.empty() ||
      depth_values.empty()) {
    throw std::invalid_argument("sweep grids must be non-empty");
  }
  std::vector<SweepCell> cells;
  for (std::size_t ci = 0; ci < diagrams.size(); ++ci) {
    const Circuit base_circuit = extract_baseline(diagrams[ci]);
    const RoutedResult base =
        route(base_circuit, hw, Mapping::identity(base_circuit.num_qubits));
    for (double beta : beta_values) {
      for (std::size_t window : window_values) {
        for (std::size_t depth : depth_values) {
          AlternatorConfig cfg;
          cfg.beta = beta;
          cfg.window = window;
          cfg.depth = depth;
          cfg.max_branch = max_branch;
          cfg.jobs = jobs;
          const auto start = std::chrono::steady_clock::now();
          auto [routed, trace] = alternating_extract(diagrams[ci], hw, cfg);
          const auto end = std::chrono::steady_clock::now();
          SweepCell cell;
          cell.circuit_index = ci;
          cell.beta = beta;
          cell.window = window;
          cell.depth = depth;
          cell.asp_base = base.asp;
          cell.asp_alt = routed.asp;
          cell.delta_fidelity = delta_fidelity(routed.asp, base.asp);
          cell.swaps_base = base.swap_count;
          cell.swaps_alt = routed.swap_count;
          cell.twoq_base = base.circuit.two_qubit_cost();
          cell.twoq_alt = routed.circuit.two_qubit_cost();
          cell.wall_time_ms =
              std::chrono::duration<double, std::milli>(end - start).count();
          cells.push_back(cell);
        }
      }
    }
  }
  return cells;
}

}  // namespace zxroute
