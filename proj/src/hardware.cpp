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

#include "zxroute/hardware.hpp"

#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zxroute {

HardwareModel::HardwareModel(
    std::size_t num_physical,
    std::set<std::pair<std::size_t, std::size_t>> coupling,
    HardwareParams params)
    : num_physical_(num_physical), params_(params) {
  if (num_physical == 0) {
    throw std::invalid_argument("hardware needs at least one qubit");
  }
  if (params.t1 <= 0 || params.t2 <= 0) {
    throw std::invalid_argument("coherence times must be positive");
  }
  if (params.fidelity_1q <= 0 || params.fidelity_1q > 1 ||
      params.fidelity_2q <= 0 || params.fidelity_2q > 1) {
    throw std::invalid_argument("fidelities must be in (0, 1]");
  }
  t_eff_ = params.t1 * params.t2 / (params.t1 + params.t2);
  for (auto [a, b] : coupling) {
    if (a == b || a >= num_physical || b >= num_physical) {
      throw std::invalid_argument("bad coupling edge");
    }
    coupling_.insert({std::min(a, b), std::max(a, b)});
  }
  edges_.assign(coupling_.begin(), coupling_.end());

  // All-pairs shortest hop distances (BFS per qubit).
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  distance_.assign(num_physical * num_physical, inf);
  std::vector<std::vector<std::size_t>> adj(num_physical);
  for (auto [a, b] : coupling_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (std::size_t s = 0; s < num_physical; ++s) {
    distance_[s * num_physical + s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (distance_[s * num_physical + v] == inf) {
          distance_[s * num_physical + v] = distance_[s * num_physical + u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  if (num_physical > 1) {
    for (std::size_t i = 0; i < num_physical * num_physical; ++i) {
      if (distance_[i] == inf) {
        throw std::invalid_argument("coupling graph must be connected");
      }
    }
  }
}

bool HardwareModel::coupled(std::size_t a, std::size_t b) const {
  return coupling_.count({std::min(a, b), std::max(a, b)}) != 0;
}

HardwareModel grid_model(std::size_t rows, std::size_t cols,
                         const HardwareParams& params) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  std::set<std::pair<std::size_t, std::size_t>> coupling;
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        coupling.insert({id(r, c), id(r, c + 1)});
      }
      if (r + 1 < rows) {
        coupling.insert({id(r, c), id(r + 1, c)});
      }
    }
  }
  return HardwareModel(rows * cols, std::move(coupling), params);
}

HardwareModel parse_hardware_config(const std::string& text) {
  HardwareParams params;
  std::size_t rows = 6;
  std::size_t cols = 6;
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
    try {
      if (key == "rows") {
        rows = std::stoul(value);
      } else if (key == "cols") {
        cols = std::stoul(value);
      } else if (key == "fidelity_1q") {
        params.fidelity_1q = std::stod(value);
      } else if (key == "fidelity_2q") {
        params.fidelity_2q = std::stod(value);
      } else if (key == "duration_1q") {
        params.duration_1q = std::stod(value);
      } else if (key == "duration_2q") {
        params.duration_2q = std::stod(value);
      } else if (key == "t1") {
        params.t1 = std::stod(value);
      } else if (key == "t2") {
        params.t2 = std::stod(value);
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value for '" + key + "' on line " +
                                  std::to_string(line_no));
    }
  }
  return grid_model(rows, cols, params);
}

std::string hardware_config_help() {
  return "rows=6\ncols=6\nfidelity_1q=0.999\nfidelity_2q=0.995\n"
         "duration_1q=1\nduration_2q=2\nt1=100000\nt2=1500\n";
}

}  // namespace zxroute
