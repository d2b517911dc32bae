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

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace zxroute {

struct HardwareParams {
  double fidelity_1q = 0.999;
  double fidelity_2q = 0.995;
  double duration_1q = 1.0;     // us
  double duration_2q = 2.0;     // us
  double t1 = 100000.0;         // us
  double t2 = 1500.0;           // us
};

/// Coupling graph plus per-operation fidelities, durations and coherence
/// times. Distances are all-pairs shortest path hops.
class HardwareModel {
 public:
  HardwareModel(std::size_t num_physical,
                std::set<std::pair<std::size_t, std::size_t>> coupling,
                HardwareParams params);

  std::size_t num_physical() const { return num_physical_; }
  const std::set<std::pair<std::size_t, std::size_t>>& coupling() const {
    return coupling_;
  }
  const HardwareParams& params() const { return params_; }
  double t_eff() const { return t_eff_; }

  bool coupled(std::size_t a, std::size_t b) const;
  std::size_t distance(std::size_t a, std::size_t b) const {
    return distance_[a * num_physical_ + b];
  }
  /// Coupling edges in ascending (low, high) order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

 private:
  std::size_t num_physical_;
  std::set<std::pair<std::size_t, std::size_t>> coupling_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  HardwareParams params_;
  double t_eff_;
  std::vector<std::size_t> distance_;
};

/// rows x cols nearest-neighbor grid, row-major qubit numbering.
HardwareModel grid_model(std::size_t rows, std::size_t cols,
                         const HardwareParams& params = HardwareParams());

/// Flat key/value hardware config: rows, cols, fidelity_1q, fidelity_2q,
/// duration_1q, duration_2q, t1, t2. Missing keys keep their defaults.
HardwareModel parse_hardware_config(const std::string& text);
std::string hardware_config_help();

}  // namespace zxroute
