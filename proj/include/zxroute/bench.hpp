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
#include <string>
#include <vector>

#include "zxroute/alternator.hpp"
#include "zxroute/hardware.hpp"

namespace zxroute {

struct ExperimentConfig {
  enum class Mode { Random, Qasm };
  Mode mode = Mode::Random;

  // Random-circuit study parameters.
  std::size_t n = 6;
  std::size_t depth = 100;
  double p_t = 0.4;
  double p_cx = 0.3;
  std::size_t count = 20;
  std::uint64_t seed = 1;

  std::vector<std::string> qasm_files;

  std::size_t hw_rows = 6;
  std::size_t hw_cols = 6;
  HardwareParams hw_params;

  std::vector<double> betas = {0.0};
  std::vector<std::size_t> windows = {kInfiniteWindow};
  std::vector<std::size_t> depths = {1};
  std::size_t max_branch = 8;

  std::size_t jobs = 1;
  std::string out_dir;

  // Verification hook: corrupts one rewrite so the oracle must notice.
  bool inject_fault = false;

  HardwareModel hardware() const;
};

/// Applies flat key=value overrides (documented in the README) on top of
/// the given config.
void apply_config_text(ExperimentConfig& cfg, const std::string& text);

/// The paper-regime grids: beta in {0} + the six published values,
/// window=inf, depth l=1.
void apply_sweep_defaults(ExperimentConfig& cfg);

struct ResultRow {
  std::string circuit_id;
  std::size_t n = 0;
  std::size_t depth = 0;
  double beta = 0;
  std::size_t window = kInfiniteWindow;
  std::size_t depth_l = 1;
  std::size_t max_branch = 1;
  double asp_base = 0;
  double asp_alt = 0;
  double delta_fidelity = 0;
  std::size_t swaps_base = 0;
  std::size_t swaps_alt = 0;
  std::size_t twoq_base = 0;
  std::size_t twoq_alt = 0;
  double wall_time_ms = 0;  // reported in JSON only; CSV stays byte-stable
  std::uint64_t seed = 0;
};

struct StudyOutput {
  std::vector<ResultRow> rows;
  std::vector<std::string> skipped;  // file + reason, qasm mode
  std::string trace_lines;           // JSON-lines, one object per iteration
};

StudyOutput run_random_study(const ExperimentConfig& cfg);
StudyOutput run_qasm_study(const ExperimentConfig& cfg);

std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::string rows_to_json_lines(const std::vector<ResultRow>& rows);

/// Writes results.csv, results.jsonl and traces.jsonl under cfg.out_dir.
void write_study_output(const ExperimentConfig& cfg, const StudyOutput& out);

struct VerifyReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

/// Oracle suite over freshly generated circuits: QASM round-trip, pipeline
/// equivalence for both extraction arms, routing legality and the
/// single-path degeneration. Failures carry reproduction seeds.
VerifyReport verify_corpus(const ExperimentConfig& cfg);

/// circuit -> ZX -> graph-like -> interior Clifford simplification.
GraphLikeDiagram pipeline(const Circuit& circuit);

std::string format_double(double value);

}  // namespace zxroute
