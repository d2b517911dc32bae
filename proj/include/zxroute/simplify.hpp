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

#include "zxroute/zx_diagram.hpp"

namespace zxroute {

/// Removes an interior spider with phase +-pi/2, complementing the Hadamard
/// wires among its neighbors and shifting their phases by -phase(s).
GraphLikeDiagram local_complementation(GraphLikeDiagram d, SpiderId s);

/// Removes a Hadamard-joined pair of interior Pauli spiders with the
/// three-way neighborhood complementation and phase bookkeeping.
GraphLikeDiagram pivot(GraphLikeDiagram d, SpiderId a, SpiderId b);

bool local_complementation_applies(const GraphLikeDiagram& d, SpiderId s);
bool pivot_applies(const GraphLikeDiagram& d, SpiderId a, SpiderId b);

/// Applies local complementation and pivoting until neither rule applies.
/// Deterministic: lowest spider id first, local complementation before
/// pivot.
GraphLikeDiagram interior_clifford_simp(GraphLikeDiagram d);

/// True when no interior rule applies.
bool is_simplification_fixpoint(const GraphLikeDiagram& d);

}  // namespace zxroute
