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

#include "zxroute/circuit.hpp"

namespace zxroute {

/// Layered random Clifford+T circuit: per layer, a CX on a random ordered
/// pair with probability p_cx, a T on a random qubit with probability p_t,
/// otherwise a uniform pick from {H, S, Z, X}. Deterministic given seed.
Circuit random_clifford_t(std::size_t num_qubits, std::size_t depth,
                          double p_t, double p_cx, std::uint64_t seed);

}  // namespace zxroute
