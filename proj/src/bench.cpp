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

#include "zxroute/bench.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "zxroute/qasm.hpp"
#include "zxroute/random_circuit.hpp"
#include "zxroute/simplify.hpp"
#include "zxroute/simulator.hpp"

namespace zxroute {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::size_t> parse_size_list(const std::string& value) {
  std::vector<std::size_t> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "inf") {
      out.push_back(kInfiniteWindow);
    } else {
      out.push_back(std::stoul(item));
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& value) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

std::string window_to_string(std::size_t window) {
  return window == kInfiniteWindow ? "inf" : std::to_string(window);
}

// Corrupts one interior spider phase; the oracle suite must notice.
void corrupt_diagram(GraphLikeDiagram& g) {
  for (SpiderId s : g.diagram.spider_ids()) {
    if (!g.diagram.is_boundary(s)) {
      g.diagram.add_to_phase(s, Phase(1, 4));
      return;
    }
  }
}

struct CircuitJob {
  std::string id;
  Circuit circuit;
  std::uint64_t seed;
};

std::vector<ResultRow> run_one_circuit(const ExperimentConfig& cfg,
                                       const HardwareModel& hw,
                                       const CircuitJob& job,
                                       std::string* trace_lines) {
  std::vector<ResultRow> rows;
  GraphLikeDiagram gl = pipeline(job.circuit);
  if (cfg.inject_fault) {
    corrupt_diagram(gl);
  }
  bool first_cell = true;
  for (double beta : cfg.betas) {
    for (std::size_t window : cfg.windows) {
      for (std::size_t depth_l : cfg.depths) {
        AlternatorConfig acfg;
        acfg.beta = beta;
        acfg.window = window;
        acfg.depth = depth_l;
        acfg.max_branch = cfg.max_branch;
        acfg.seed = job.seed;
        const auto start = std::chrono::steady_clock::now();
        ComparisonRecord rec = compare_to_baseline(gl, hw, acfg);
        const auto end = std::chrono::steady_clock::now();
        ResultRow row;
        row.circuit_id = job.id;
        row.n = job.circuit.num_qubits;
        row.depth = job.circuit.depth();
        row.beta = beta;
        row.window = window;
        row.depth_l = depth_l;
        row.max_branch = cfg.max_branch;
        row.asp_base = rec.baseline.asp;
        row.asp_alt = rec.alternating.asp;
        row.delta_fidelity = rec.delta_fidelity;
        row.swaps_base = rec.baseline.swap_count;
        row.swaps_alt = rec.alternating.swap_count;
        row.twoq_base = rec.baseline.circuit.two_qubit_cost();
        row.twoq_alt = rec.alternating.circuit.two_qubit_cost();
        row.wall_time_ms =
            std::chrono::duration<double, std::milli>(end - start).count();
        row.seed = job.seed;
        rows.push_back(row);
        if (first_cell && trace_lines != nullptr) {
          // One trace per circuit (first grid point) keeps files bounded.
          std::istringstream lines(rec.trace.to_json_lines());
          std::string line;
          while (std::getline(lines, line)) {
            nlohmann::json j = nlohmann::json::parse(line);
            j["circuit_id"] = job.id;
            *trace_lines += j.dump();
            *trace_lines += "\n";
          }
          first_cell = false;
        }
      }
    }
  }
  return rows;
}

StudyOutput run_jobs(const ExperimentConfig& cfg,
                     const std::vector<CircuitJob>& jobs) {
  const HardwareModel hw = cfg.hardware();
  StudyOutput out;
  std::vector<std::vector<ResultRow>> per_circuit(jobs.size());
  std::vector<std::string> per_trace(jobs.size());
  std::vector<std::string> per_error(jobs.size());

  auto work = [&](std::size_t i) {
    try {
      per_circuit[i] = run_one_circuit(cfg, hw, jobs[i], &per_trace[i]);
    } catch (const std::exception& e) {
      per_error[i] = e.what();
    }
  };
  if (cfg.jobs <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      work(i);
    }
  } else {
    const std::size_t workers = std::min(cfg.jobs, jobs.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < jobs.size(); i += workers) {
          work(i);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  // Deterministic merge in job order regardless of thread interleaving.
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!per_error[i].empty()) {
      out.skipped.push_back(jobs[i].id + ": " + per_error[i]);
      continue;
    }
    out.rows.insert(out.rows.end(), per_circuit[i].begin(),
                    per_circuit[i].end());
    out.trace_lines += per_trace[i];
  }
  return out;
}

}  // namespace

HardwareModel ExperimentConfig::hardware() const {
  return grid_model(hw_rows, hw_cols, hw_params);
}

GraphLikeDiagram pipeline(const Circuit& circuit) {
  return interior_clifford_simp(to_graph_like(circuit_to_zx(circuit)));
}

void apply_config_text(ExperimentConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw std::invalid_argument("bad config line " +
                                    std::to_string(line_no));
      }
      continue;
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "mode") {
      if (value == "random") {
        cfg.mode = ExperimentConfig::Mode::Random;
      } else if (value == "qasm") {
        cfg.mode = ExperimentConfig::Mode::Qasm;
      } else {
        throw std::invalid_argument("unknown mode '" + value + "'");
      }
    } else if (key == "n") {
      cfg.n = std::stoul(value);
    } else if (key == "depth") {
      cfg.depth = std::stoul(value);
    } else if (key == "p_t") {
      cfg.p_t = std::stod(value);
    } else if (key == "p_cx") {
      cfg.p_cx = std::stod(value);
    } else if (key == "count") {
      cfg.count = std::stoul(value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "qasm") {
      cfg.qasm_files.push_back(value);
    } else if (key == "rows") {
      cfg.hw_rows = std::stoul(value);
    } else if (key == "cols") {
      cfg.hw_cols = std::stoul(value);
    } else if (key == "fidelity_1q") {
      cfg.hw_params.fidelity_1q = std::stod(value);
    } else if (key == "fidelity_2q") {
      cfg.hw_params.fidelity_2q = std::stod(value);
    } else if (key == "duration_1q") {
      cfg.hw_params.duration_1q = std::stod(value);
    } else if (key == "duration_2q") {
      cfg.hw_params.duration_2q = std::stod(value);
    } else if (key == "t1") {
      cfg.hw_params.t1 = std::stod(value);
    } else if (key == "t2") {
      cfg.hw_params.t2 = std::stod(value);
    } else if (key == "betas") {
      cfg.betas = parse_double_list(value);
    } else if (key == "windows") {
      cfg.windows = parse_size_list(value);
    } else if (key == "depths") {
      cfg.depths = parse_size_list(value);
    } else if (key == "max_branch") {
      cfg.max_branch = std::stoul(value);
    } else if (key == "jobs") {
      cfg.jobs = std::stoul(value);
    } else if (key == "out") {
      cfg.out_dir = value;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

void apply_sweep_defaults(ExperimentConfig& cfg) {
  cfg.betas = {0.0, 5e-5, 5e-4, 1e-3, 3e-3, 5e-3, 0.01};
  cfg.windows = {kInfiniteWindow};
  cfg.depths = {1};
}

StudyOutput run_random_study(const ExperimentConfig& cfg) {
  std::vector<CircuitJob> jobs;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed_i = mix_seed(cfg.seed, i);
    CircuitJob job;
    job.id = "random-" + std::to_string(i);
    job.seed = seed_i;
    job.circuit = random_clifford_t(cfg.n, cfg.depth, cfg.p_t, cfg.p_cx,
                                    seed_i);
    jobs.push_back(std::move(job));
  }
  return run_jobs(cfg, jobs);
}

StudyOutput run_qasm_study(const ExperimentConfig& cfg) {
  std::vector<CircuitJob> jobs;
  StudyOutput preskip;
  const HardwareModel hw = cfg.hardware();
  for (std::size_t i = 0; i < cfg.qasm_files.size(); ++i) {
    const std::string& path = cfg.qasm_files[i];
    std::ifstream in(path);
    if (!in) {
      preskip.skipped.push_back(path + ": cannot open");
      continue;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      CircuitJob job;
      job.id = path;
      job.seed = mix_seed(cfg.seed, i);
      job.circuit = parse_qasm(buffer.str());
      if (job.circuit.num_qubits > hw.num_physical()) {
        preskip.skipped.push_back(path + ": more qubits than hardware");
        continue;
      }
      jobs.push_back(std::move(job));
    } catch (const QasmError& e) {
      preskip.skipped.push_back(path + ": " + e.what());
    }
  }
  StudyOutput out = run_jobs(cfg, jobs);
  out.skipped.insert(out.skipped.begin(), preskip.skipped.begin(),
                     preskip.skipped.end());
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "circuit_id,n,depth,beta,window,depth_l,max_branch,asp_base,asp_alt,"
      "delta_fidelity,swaps_base,swaps_alt,twoq_base,twoq_alt,seed\r\n";
  for (const ResultRow& r : rows) {
    std::string id = r.circuit_id;
    if (id.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : id) {
        quoted += c;
        if (c == '"') {
          quoted += '"';
        }
      }
      quoted += "\"";
      id = quoted;
    }
    out += id + "," + std::to_string(r.n) + "," + std::to_string(r.depth) +
           "," + format_double(r.beta) + "," + window_to_string(r.window) +
           "," + std::to_string(r.depth_l) + "," +
           std::to_string(r.max_branch) + "," + format_double(r.asp_base) +
           "," + format_double(r.asp_alt) + "," +
           format_double(r.delta_fidelity) + "," +
           std::to_string(r.swaps_base) + "," + std::to_string(r.swaps_alt) +
           "," + std::to_string(r.twoq_base) + "," +
           std::to_string(r.twoq_alt) + "," + std::to_string(r.seed) +
           "\r\n";
  }
  return out;
}

std::string rows_to_json_lines(const std::vector<ResultRow>& rows) {
  std::string out;
  for (const ResultRow& r : rows) {
    nlohmann::json j{{"circuit_id", r.circuit_id},
                     {"n", r.n},
                     {"depth", r.depth},
                     {"beta", r.beta},
                     {"window", window_to_string(r.window)},
                     {"depth_l", r.depth_l},
                     {"max_branch", r.max_branch},
                     {"asp_base", r.asp_base},
                     {"asp_alt", r.asp_alt},
                     {"delta_fidelity", r.delta_fidelity},
                     {"swaps_base", r.swaps_base},
                     {"swaps_alt", r.swaps_alt},
                     {"twoq_base", r.twoq_base},
                     {"twoq_alt", r.twoq_alt},
                     {"wall_time_ms", r.wall_time_ms},
                     {"seed", r.seed}};
    out += j.dump();
    out += "\n";
  }
  return out;
}

void write_study_output(const ExperimentConfig& cfg, const StudyOutput& out) {
  namespace fs = std::filesystem;
  if (cfg.out_dir.empty()) {
    throw std::invalid_argument("output directory not set");
  }
  fs::create_directories(cfg.out_dir);
  {
    std::ofstream csv(fs::path(cfg.out_dir) / "results.csv",
                      std::ios::binary);
    csv << rows_to_csv(out.rows);
  }
  {
    std::ofstream jsonl(fs::path(cfg.out_dir) / "results.jsonl",
                        std::ios::binary);
    jsonl << rows_to_json_lines(out.rows);
  }
  {
    std::ofstream traces(fs::path(cfg.out_dir) / "traces.jsonl",
                         std::ios::binary);
    traces << out.trace_lines;
  }
  if (!out.skipped.empty()) {
    std::ofstream skipped(fs::path(cfg.out_dir) / "skipped.txt",
                          std::ios::binary);
    for (const std::string& s : out.skipped) {
      skipped << s << "\n";
    }
  }
}

std::string VerifyReport::to_string() const {
  std::string out = "checks: " + std::to_string(checks) + "\n";
  for (const std::string& w : warnings) {
    out += "warning: " + w + "\n";
  }
  for (const std::string& f : failures) {
    out += "FAIL: " + f + "\n";
  }
  out += passed() ? "verdict: PASS\n" : "verdict: FAIL\n";
  return out;
}

VerifyReport verify_corpus(const ExperimentConfig& cfg) {
  VerifyReport report;
  if (cfg.n > 8) {
    throw std::invalid_argument("verification corpus is limited to 8 qubits");
  }
  if (cfg.count == 0) {
    report.warnings.push_back("empty corpus, vacuous pass");
    return report;
  }
  const HardwareModel hw = cfg.hardware();
  constexpr double kTol = 1e-8;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed_i = mix_seed(cfg.seed, i);
    const std::string tag = "seed=" + std::to_string(seed_i);
    Circuit c;
    try {
      c = random_clifford_t(cfg.n, cfg.depth, cfg.p_t, cfg.p_cx, seed_i);

      // QASM round-trip.
      ++report.checks;
      if (parse_qasm(write_qasm(c)) != c.canonicalized()) {
        report.failures.push_back("qasm round-trip mismatch, " + tag);
      }

      GraphLikeDiagram gl = pipeline(c);
      if (cfg.inject_fault) {
        corrupt_diagram(gl);
      }

      // Baseline extraction equivalence.
      ++report.checks;
      const Circuit base = extract_baseline(gl);
      if (!equivalent_up_to_phase(c, base, kTol)) {
        report.failures.push_back("baseline extraction not equivalent, " +
                                  tag);
      }

      // Routing legality + permutation equivalence.
      ++report.checks;
      const RoutedResult routed_base =
          route(base, hw, Mapping::identity(base.num_qubits));
      if (!hardware_legal(routed_base.circuit, hw)) {
        report.failures.push_back("routed baseline is illegal, " + tag);
      } else if (hw.num_physical() == base.num_qubits &&
                 !equivalent_up_to_permutation(
                     routed_base.circuit, c,
                     routed_permutation(routed_base, base.num_qubits), kTol)) {
        report.failures.push_back("routed baseline not equivalent, " + tag);
      }

      // Alternating arm.
      ++report.checks;
      AlternatorConfig acfg;
      acfg.max_branch = cfg.max_branch;
      auto [alt, trace] = alternating_extract(gl, hw, acfg);
      if (!hardware_legal(alt.circuit, hw)) {
        report.failures.push_back("routed alternating is illegal, " + tag);
      } else if (hw.num_physical() == c.num_qubits &&
                 !equivalent_up_to_permutation(
                     alt.circuit, c, routed_permutation(alt, c.num_qubits),
                     kTol)) {
        report.failures.push_back("routed alternating not equivalent, " +
                                  tag);
      }

      // Degeneration: a single path recovers the plain pipeline.
      ++report.checks;
      AlternatorConfig single = acfg;
      single.max_branch = 1;
      auto [alt1, trace1] = alternating_extract(gl, hw, single);
      if (alt1.circuit != routed_base.circuit) {
        report.failures.push_back("single-path degeneration mismatch, " +
                                  tag);
      }

      // Evaluation budget.
      ++report.checks;
      if (trace.evaluations > trace.k * trace.m) {
        report.failures.push_back("evaluation budget exceeded, " + tag);
      }
    } catch (const std::exception& e) {
      report.failures.push_back(std::string("exception: ") + e.what() + ", " +
                                tag);
    }
  }
  return report;
}

}  // namespace zxroute
