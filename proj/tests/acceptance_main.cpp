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

// Acceptance suite: one criterion per check, one pass/fail line each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "zxroute/alternator.hpp"
#include "zxroute/bench.hpp"
#include "zxroute/qasm.hpp"
#include "zxroute/random_circuit.hpp"
#include "zxroute/simulator.hpp"

using namespace zxroute;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

int failures = 0;

void run(int number, const std::string& name,
         const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  outcome.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  std::ostringstream line;
  line << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion " << number
       << ": " << name;
  if (!outcome.detail.empty()) {
    line << " (" << outcome.detail << ")";
  }
  line << " [" << outcome.seconds << "s]";
  std::cout << line.str() << std::endl;
  if (!outcome.pass) {
    ++failures;
  }
}

// The worked-example instance: its graph-like pipeline diagram has a
// three-gate extraction whose routed form needs one swap on the 1x4 chain,
// while a four-gate chain-legal extraction exists and wins under the
// alternating scheme.
Circuit worked_example_circuit() {
  Circuit c(4);
  c.append(Gate::s(3));
  c.append(Gate::cz(0, 1));
  c.append(Gate::h(2));
  c.append(Gate::cz(1, 2));
  c.append(Gate::h(1));
  c.append(Gate::h(2));
  c.append(Gate::cz(1, 3));
  c.append(Gate::h(3));
  return c;
}

bool check_time(Outcome& o, double seconds_limit,
                std::chrono::steady_clock::time_point start) {
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  if (elapsed > seconds_limit) {
    o.pass = false;
    o.detail += " over time budget";
    return false;
  }
  return true;
}

Outcome criterion_worked_example() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Circuit source = worked_example_circuit();
  const GraphLikeDiagram g = pipeline(source);
  const HardwareModel chain = grid_model(1, 4);

  const Circuit base = extract_baseline(g);
  const RoutedResult routed_base = route(base, chain);
  AlternatorConfig cfg;
  cfg.max_branch = 8;
  cfg.depth = 2;
  auto [alt, trace] = alternating_extract(g, chain, cfg);
  const double delta = delta_fidelity(alt.asp, routed_base.asp);

  std::ostringstream d;
  d << "base " << base.two_qubit_count() << " gates -> routed cost "
    << routed_base.circuit.two_qubit_cost() << " with "
    << routed_base.swap_count << " swap; alternating cost "
    << alt.circuit.two_qubit_cost() << " with " << alt.swap_count
    << " swaps; delta " << delta;
  o.detail = d.str();

  o.pass = base.two_qubit_count() == 3 &&
           routed_base.circuit.two_qubit_cost() == 6 &&
           routed_base.swap_count == 1 &&
           alt.circuit.two_qubit_cost() == 4 && alt.swap_count == 0 &&
           delta > 0 &&
           equivalent_up_to_permutation(
               routed_base.circuit, source,
               routed_permutation(routed_base, 4), 1e-8) &&
           equivalent_up_to_permutation(alt.circuit, source,
                                        routed_permutation(alt, 4), 1e-8);
  check_time(o, 1.0, start);
  return o;
}

Outcome criterion_degeneration() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const HardwareModel hw = grid_model(2, 3);
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 3 + i % 4;
    const std::size_t depth = 20 + (i % 5) * 20;  // up to 100
    const Circuit c = random_clifford_t(n, depth, 0.3, 0.3, 52000 + i);
    const GraphLikeDiagram g = pipeline(c);
    const RoutedResult base = route(extract_baseline(g), hw,
                                    Mapping::identity(n));
    AlternatorConfig cfg;
    cfg.max_branch = 1;
    auto [alt, trace] = alternating_extract(g, hw, cfg);
    if (alt.circuit != base.circuit) {
      o.pass = false;
      o.detail = "mismatch at seed " + std::to_string(52000 + i);
      return o;
    }
    ++checked;
  }
  o.detail = std::to_string(checked) + " circuits gate-for-gate identical";
  check_time(o, 300.0, start);
  return o;
}

struct CorpusResults {
  std::vector<Circuit> routed_outputs;  // all routed circuits, for legality
  bool equivalence_ok = true;
  std::string first_failure;
};

CorpusResults corpus_results;
bool corpus_done = false;

void ensure_corpus() {
  if (corpus_done) {
    return;
  }
  corpus_done = true;
  const HardwareModel hw = grid_model(2, 3);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 3 + i % 4;  // 3..6
    const std::size_t depth = 20 + (i % 3) * 20;  // 20..60
    const Circuit c = random_clifford_t(n, depth, 0.3, 0.3, 91000 + i);
    const GraphLikeDiagram g = pipeline(c);

    const RoutedResult base = route(extract_baseline(g), hw,
                                    Mapping::identity(n));
    AlternatorConfig cfg;
    cfg.max_branch = 4;
    auto [alt, trace] = alternating_extract(g, hw, cfg);

    corpus_results.routed_outputs.push_back(base.circuit);
    corpus_results.routed_outputs.push_back(alt.circuit);
    if (hw.num_physical() == n) {
      if (!equivalent_up_to_permutation(base.circuit, c,
                                        routed_permutation(base, n), 1e-8) ||
          !equivalent_up_to_permutation(alt.circuit, c,
                                        routed_permutation(alt, n), 1e-8)) {
        corpus_results.equivalence_ok = false;
        if (corpus_results.first_failure.empty()) {
          corpus_results.first_failure =
              "seed " + std::to_string(91000 + i);
        }
      }
    } else {
      // Fewer logical than physical qubits: check on the logical subspace
      // by padding the source circuit with idle qubits.
      Circuit padded(hw.num_physical());
      for (const Gate& gate : c.gates) {
        padded.append(gate);
      }
      std::vector<std::size_t> perm(hw.num_physical());
      for (std::size_t q = 0; q < hw.num_physical(); ++q) {
        perm[q] = q < n ? base.final_mapping.log_to_phys[q] : q;
      }
      // Permutations may collide with idle wires; skip those rare cases.
      std::vector<bool> used(hw.num_physical(), false);
      bool valid = true;
      for (std::size_t p : perm) {
        if (used[p]) {
          valid = false;
          break;
        }
        used[p] = true;
      }
      if (valid &&
          !equivalent_up_to_permutation(base.circuit, padded, perm, 1e-8)) {
        corpus_results.equivalence_ok = false;
        if (corpus_results.first_failure.empty()) {
          corpus_results.first_failure =
              "seed " + std::to_string(91000 + i);
        }
      }
    }
  }
}

Outcome criterion_oracle_corpus() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  ensure_corpus();
  o.pass = corpus_results.equivalence_ok;
  o.detail = o.pass ? "200 circuits, both arms equivalent to source"
                    : corpus_results.first_failure;
  check_time(o, 900.0, start);
  return o;
}

Outcome criterion_routing_legality() {
  Outcome o;
  ensure_corpus();
  const HardwareModel hw = grid_model(2, 3);
  std::size_t gates = 0;
  for (const Circuit& c : corpus_results.routed_outputs) {
    for (const Gate& g : c.gates) {
      if (is_two_qubit(g.kind)) {
        ++gates;
        if (!hw.coupled(g.qubits[0], g.qubits[1])) {
          o.pass = false;
          o.detail = "illegal gate " + g.to_string();
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(gates) + " two-qubit gates on coupling edges";
  return o;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome criterion_beta_study() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const HardwareModel hw = grid_model(6, 6);
  const std::vector<double> betas = {0.0,  5e-5, 5e-4, 1e-3,
                                     3e-3, 5e-3, 0.01};
  std::vector<double> best_column;
  std::vector<double> zero_column;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Circuit c = random_clifford_t(6, 100, 0.4, 0.3, 77000 + i);
    const GraphLikeDiagram g = pipeline(c);
    const RoutedResult base = route(extract_baseline(g), hw,
                                    Mapping::identity(6));
    double best = -2.0;
    double at_zero = 0.0;
    for (double beta : betas) {
      AlternatorConfig cfg;
      cfg.beta = beta;
      cfg.max_branch = 8;
      auto [alt, trace] = alternating_extract(g, hw, cfg);
      const double delta = delta_fidelity(alt.asp, base.asp);
      best = std::max(best, delta);
      if (beta == 0.0) {
        at_zero = delta;
      }
    }
    best_column.push_back(best);
    zero_column.push_back(at_zero);
  }
  const double med_best = median(best_column);
  const double med_zero = median(zero_column);
  std::ostringstream d;
  d << "median best-beta delta " << med_best << ", median beta=0 delta "
    << med_zero;
  o.detail = d.str();
  o.pass = med_best >= 0.0 && med_best >= med_zero;
  check_time(o, 1800.0, start);
  return o;
}

Outcome criterion_asp_conformance() {
  Outcome o;
  HardwareParams p;
  p.fidelity_2q = 0.995;
  const HardwareModel hw = grid_model(1, 2, p);
  Circuit three(2);
  three.append(Gate::cz(0, 1));
  three.append(Gate::cz(0, 1));
  three.append(Gate::cz(0, 1));
  const double got = asp(three, hw);
  const double want = 0.995 * 0.995 * 0.995;
  if (std::abs(got - want) > 1e-12) {
    o.pass = false;
    o.detail = "zero-idle product mismatch";
    return o;
  }
  // Idle penalty, cross-checked against independent arithmetic.
  Circuit idle_case(2);
  idle_case.append(Gate::h(0));
  idle_case.append(Gate::cx(0, 1));
  const double t_idle = p.duration_1q;  // qubit 1 waits for the H
  const double t_eff = p.t1 * p.t2 / (p.t1 + p.t2);
  const double independent =
      p.fidelity_1q * p.fidelity_2q * std::exp(-t_idle / t_eff);
  const double got_idle = asp(idle_case, hw);
  if (std::abs(got_idle - independent) > 1e-15) {
    o.pass = false;
    o.detail = "idle penalty mismatch";
    return o;
  }
  o.detail = "0.995^3 and exp(-t_idle/T_eff) both exact";
  return o;
}

Outcome criterion_bias_conformance() {
  Outcome o;
  const std::vector<double> betas = {0.0,  5e-5, 5e-4, 1e-3,
                                     3e-3, 5e-3, 0.01};
  // Exact bias arithmetic on real paths.
  const Circuit c = random_clifford_t(4, 30, 0.3, 0.3, 4242);
  const GraphLikeDiagram g = pipeline(c);
  ExtractorState st = init_extractor(g);
  const auto paths = enumerate_paths(st, 1, 4);
  const HardwareModel hw = grid_model(1, 4);
  for (double beta : betas) {
    AlternatorConfig cfg;
    cfg.beta = beta;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const PathScore s = score_path(st.extracted_rev, paths[i], hw, cfg,
                                     Mapping::identity(4), i, 4);
      if (s.bias != beta * static_cast<double>(paths[i].delta_w) ||
          s.total != s.asp + s.bias) {
        o.pass = false;
        o.detail = "bias arithmetic mismatch";
        return o;
      }
    }
  }
  // Argmax monotonicity on 10 frozen candidate sets.
  std::mt19937_64 rng(515151);
  std::uniform_real_distribution<double> asp_dist(0.2, 1.0);
  std::uniform_int_distribution<int> dw_dist(0, 12);
  for (int set = 0; set < 10; ++set) {
    std::vector<std::pair<double, int>> cands;
    for (int i = 0; i < 6; ++i) {
      cands.push_back({asp_dist(rng), dw_dist(rng)});
    }
    int last = -1;
    for (double beta : betas) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < cands.size(); ++i) {
        const double ti = cands[i].first + beta * cands[i].second;
        const double tb = cands[best].first + beta * cands[best].second;
        if (ti > tb || (ti == tb && cands[i].second > cands[best].second)) {
          best = i;
        }
      }
      if (cands[best].second < last) {
        o.pass = false;
        o.detail = "argmax delta_w decreased with beta";
        return o;
      }
      last = cands[best].second;
    }
  }
  o.detail = "bias exact on the paper grid; 10 frozen sets monotone";
  return o;
}

Outcome criterion_budget() {
  Outcome o;
  const HardwareModel hw = grid_model(2, 3);
  std::size_t worst_l1 = 0, worst_l2 = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Circuit c = random_clifford_t(5, 50, 0.3, 0.3, 303000 + i);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig cfg;
    cfg.max_branch = 4;
    auto [r1, t1] = alternating_extract(g, hw, cfg);
    if (t1.evaluations > t1.k * cfg.max_branch) {
      o.pass = false;
      o.detail = "l=1 budget exceeded at seed " + std::to_string(303000 + i);
      return o;
    }
    worst_l1 = std::max(worst_l1, t1.evaluations);
    cfg.depth = 2;
    auto [r2, t2] = alternating_extract(g, hw, cfg);
    if (t2.evaluations > t2.k * cfg.max_branch * cfg.max_branch) {
      o.pass = false;
      o.detail = "l=2 budget exceeded at seed " + std::to_string(303000 + i);
      return o;
    }
    worst_l2 = std::max(worst_l2, t2.evaluations);
  }
  o.detail = "20 circuits within k*m (worst " + std::to_string(worst_l1) +
             ") and k*m^2 (worst " + std::to_string(worst_l2) + ")";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  ExperimentConfig cfg;
  cfg.n = 5;
  cfg.depth = 40;
  cfg.count = 5;
  cfg.seed = 99;
  cfg.hw_rows = 2;
  cfg.hw_cols = 3;
  cfg.max_branch = 4;
  cfg.betas = {0.0, 1e-3};
  const std::string a = rows_to_csv(run_random_study(cfg).rows);
  const std::string b = rows_to_csv(run_random_study(cfg).rows);
  o.pass = a == b;
  o.detail = o.pass ? "byte-identical CSV across two runs" : "CSV differs";
  return o;
}

Outcome criterion_parallel_serial() {
  Outcome o;
  const HardwareModel hw = grid_model(2, 3);
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Circuit c = random_clifford_t(6, 40, 0.3, 0.3, 404000 + i);
    const GraphLikeDiagram g = pipeline(c);
    AlternatorConfig serial;
    serial.max_branch = 6;
    serial.jobs = 1;
    AlternatorConfig parallel = serial;
    parallel.jobs = 4;
    auto [rs, ts] = alternating_extract(g, hw, serial);
    auto [rp, tp] = alternating_extract(g, hw, parallel);
    if (rs.circuit != rp.circuit || ts.iterations.size() != tp.iterations.size()) {
      o.pass = false;
      o.detail = "outputs differ at seed " + std::to_string(404000 + i);
      return o;
    }
    for (std::size_t k = 0; k < ts.iterations.size(); ++k) {
      if (ts.iterations[k].chosen_index != tp.iterations[k].chosen_index) {
        o.pass = false;
        o.detail = "chosen paths differ at seed " + std::to_string(404000 + i);
        return o;
      }
    }
  }
  o.detail = "10 circuits, 1 vs 4 jobs identical";
  return o;
}

}  // namespace

int main() {
  run(1, "worked example on the 1x4 chain (6 vs 4 two-qubit gates)",
      criterion_worked_example);
  run(2, "single-path degeneration equals the baseline pipeline",
      criterion_degeneration);
  run(3, "correctness oracle over 200 random circuits",
      criterion_oracle_corpus);
  run(4, "routing legality across the corpus", criterion_routing_legality);
  run(5, "beta study medians (qualitative random-circuit reproduction)",
      criterion_beta_study);
  run(6, "ASP formula conformance", criterion_asp_conformance);
  run(7, "edge-bias conformance and monotonicity", criterion_bias_conformance);
  run(8, "evaluation budget k*m and k*m^2", criterion_budget);
  run(9, "study determinism (byte-identical CSV)", criterion_determinism);
  run(10, "parallel/serial scoring equivalence", criterion_parallel_serial);
  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
  } else {
    std::cout << failures << " acceptance criteria failed" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
