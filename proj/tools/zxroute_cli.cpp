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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zxroute/bench.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  long long seed = -1;
  std::size_t jobs = 1;
  bool inject_fault = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "flat key=value config file");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "override the study seed");
  cmd->add_option("--jobs", opts.jobs, "parallel circuit jobs");
  cmd->add_flag("--inject-fault", opts.inject_fault,
                "corrupt one rewrite (verification self-test)")
      ->group("");
}

zxroute::ExperimentConfig load_config(const CommonOptions& opts) {
  zxroute::ExperimentConfig cfg;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      throw std::runtime_error("cannot open config: " + opts.config_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    zxroute::apply_config_text(cfg, buffer.str());
  }
  if (opts.seed >= 0) {
    cfg.seed = static_cast<std::uint64_t>(opts.seed);
  }
  cfg.jobs = opts.jobs;
  cfg.out_dir = opts.out_dir;
  cfg.inject_fault = opts.inject_fault;
  return cfg;
}

int finish_study(const zxroute::ExperimentConfig& cfg,
                 const zxroute::StudyOutput& out) {
  zxroute::write_study_output(cfg, out);
  std::cout << "rows: " << out.rows.size() << "\n";
  for (const std::string& s : out.skipped) {
    std::cout << "skipped: " << s << "\n";
  }
  std::cout << "wrote " << cfg.out_dir << "/results.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alternating ZX extraction with routing-aware path selection"};
  app.require_subcommand(1);

  CommonOptions random_opts, qasm_opts, verify_opts, sweep_opts;

  CLI::App* run_random =
      app.add_subcommand("run-random", "random Clifford+T study");
  add_common(run_random, random_opts);

  CLI::App* run_qasm = app.add_subcommand("run-qasm", "QASM file study");
  std::vector<std::string> qasm_files;
  add_common(run_qasm, qasm_opts);
  run_qasm->add_option("files", qasm_files, "QASM input files");

  CLI::App* verify =
      app.add_subcommand("verify", "oracle verification of the pipeline");
  add_common(verify, verify_opts);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "full-factorial parameter sweep (paper-regime beta grid)");
  add_common(sweep_cmd, sweep_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_random->parsed()) {
      zxroute::ExperimentConfig cfg = load_config(random_opts);
      cfg.mode = zxroute::ExperimentConfig::Mode::Random;
      return finish_study(cfg, zxroute::run_random_study(cfg));
    }
    if (run_qasm->parsed()) {
      zxroute::ExperimentConfig cfg = load_config(qasm_opts);
      cfg.mode = zxroute::ExperimentConfig::Mode::Qasm;
      for (const std::string& f : qasm_files) {
        cfg.qasm_files.push_back(f);
      }
      if (cfg.qasm_files.empty()) {
        std::cerr << "no QASM files given\n";
        return 2;
      }
      return finish_study(cfg, zxroute::run_qasm_study(cfg));
    }
    if (verify->parsed()) {
      zxroute::ExperimentConfig cfg = load_config(verify_opts);
      if (cfg.count == 20 && cfg.depth == 100) {
        cfg.depth = 40;  // verification default, oracle-sized
        cfg.n = std::min<std::size_t>(cfg.n, 6);
      }
      zxroute::VerifyReport report = zxroute::verify_corpus(cfg);
      std::cout << report.to_string();
      return report.passed() ? 0 : 1;
    }
    if (sweep_cmd->parsed()) {
      zxroute::ExperimentConfig cfg = load_config(sweep_opts);
      zxroute::apply_sweep_defaults(cfg);
      if (!sweep_opts.config_path.empty()) {
        // Config overrides the sweep defaults where it sets grids.
        std::ifstream in(sweep_opts.config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        zxroute::apply_config_text(cfg, buffer.str());
      }
      return finish_study(cfg, cfg.mode == zxroute::ExperimentConfig::Mode::Qasm
                                   ? zxroute::run_qasm_study(cfg)
                                   : zxroute::run_random_study(cfg));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
