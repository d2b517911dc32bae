# Copyright 2026 The zxroute authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Alternating ZX-diagram extraction with routing-aware path selection."""

from ._zxroute import (  # noqa: F401
    INFINITE_WINDOW,
    AlternatorConfig,
    Circuit,
    GraphLikeDiagram,
    HardwareModel,
    alternating_extract,
    asp,
    compare_to_baseline,
    delta_fidelity,
    equivalent_up_to_permutation,
    equivalent_up_to_phase,
    extract_baseline,
    grid_model,
    interior_clifford_simp,
    parse_qasm,
    pipeline,
    random_clifford_t,
    route,
    simulate,
    to_graph_like,
    write_qasm,
)

__all__ = [
    "INFINITE_WINDOW",
    "AlternatorConfig",
    "Circuit",
    "GraphLikeDiagram",
    "HardwareModel",
    "alternating_extract",
    "asp",
    "compare_to_baseline",
    "delta_fidelity",
    "equivalent_up_to_permutation",
    "equivalent_up_to_phase",
    "extract_baseline",
    "grid_model",
    "interior_clifford_simp",
    "parse_qasm",
    "pipeline",
    "random_clifford_t",
    "route",
    "simulate",
    "to_graph_like",
    "write_qasm",
]
