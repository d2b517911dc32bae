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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zxroute/alternator.hpp"
#include "zxroute/bench.hpp"
#include "zxroute/qasm.hpp"
#include "zxroute/random_circuit.hpp"
#include "zxroute/simplify.hpp"
#include "zxroute/simulator.hpp"

namespace py = pybind11;
using namespace zxroute;

namespace {

std::vector<std::vector<std::complex<double>>> unitary_rows(const Unitary& u) {
  std::vector<std::vector<std::complex<double>>> rows(
      u.dim(), std::vector<std::complex<double>>(u.dim()));
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < u.dim(); ++j) {
      rows[i][j] = u.at(i, j);
    }
  }
  return rows;
}

py::dict routed_to_dict(const RoutedResult& r) {
  py::dict d;
  d["qasm"] = write_qasm(r.circuit);
  d["final_mapping"] = r.final_mapping.log_to_phys;
  d["swap_count"] = r.swap_count;
  d["asp"] = r.asp;
  d["idle_time_total"] = r.idle_time_total;
  d["two_qubit_cost"] = r.circuit.two_qubit_cost();
  return d;
}

}  // namespace

PYBIND11_MODULE(_zxroute, m) {
  m.doc() = "alternating ZX extraction with routing-aware path selection";

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<std::size_t>(), py::arg("num_qubits"))
      .def_readonly("num_qubits", &Circuit::num_qubits)
      .def("depth", &Circuit::depth)
      .def("gate_count", [](const Circuit& c) { return c.gates.size(); })
      .def("two_qubit_count", &Circuit::two_qubit_count)
      .def("two_qubit_cost", &Circuit::two_qubit_cost)
      .def("to_qasm", [](const Circuit& c) { return write_qasm(c); })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("__len__", [](const Circuit& c) { return c.gates.size(); });

  py::class_<GraphLikeDiagram>(m, "GraphLikeDiagram")
      .def("hadamard_wire_count", &GraphLikeDiagram::hadamard_wire_count)
      .def("spider_count",
           [](const GraphLikeDiagram& g) { return g.diagram.spider_count(); })
      .def("dump", [](const GraphLikeDiagram& g) { return g.diagram.dump(); });

  py::class_<HardwareModel>(m, "HardwareModel")
      .def_property_readonly("num_physical", &HardwareModel::num_physical)
      .def_property_readonly("t_eff", &HardwareModel::t_eff)
      .def("coupled", &HardwareModel::coupled)
      .def("distance", &HardwareModel::distance);

  py::class_<AlternatorConfig>(m, "AlternatorConfig")
      .def(py::init<>())
      .def_readwrite("beta", &AlternatorConfig::beta)
      .def_readwrite("window", &AlternatorConfig::window)
      .def_readwrite("depth", &AlternatorConfig::depth)
      .def_readwrite("max_branch", &AlternatorConfig::max_branch)
      .def_readwrite("jobs", &AlternatorConfig::jobs);

  m.attr("INFINITE_WINDOW") = kInfiniteWindow;

  m.def("parse_qasm",
        [](const std::string& text) { return parse_qasm(text); },
        py::arg("text"));
  m.def("write_qasm", &write_qasm, py::arg("circuit"));
  m.def("random_clifford_t", &random_clifford_t, py::arg("num_qubits"),
        py::arg("depth"), py::arg("p_t"), py::arg("p_cx"), py::arg("seed"));
  m.def(
      "simulate",
      [](const Circuit& c) { return unitary_rows(simulate(c)); },
      py::arg("circuit"));
  m.def("equivalent_up_to_phase", &equivalent_up_to_phase, py::arg("a"),
        py::arg("b"), py::arg("tol") = 1e-8);
  m.def("equivalent_up_to_permutation", &equivalent_up_to_permutation,
        py::arg("a"), py::arg("b"), py::arg("perm"), py::arg("tol") = 1e-8);

  m.def(
      "to_graph_like",
      [](const Circuit& c) { return to_graph_like(circuit_to_zx(c)); },
      py::arg("circuit"));
  m.def("interior_clifford_simp",
        [](const GraphLikeDiagram& g) { return interior_clifford_simp(g); },
        py::arg("diagram"));
  m.def("pipeline", &pipeline, py::arg("circuit"),
        "circuit -> ZX -> graph-like -> interior Clifford simplification");
  m.def("extract_baseline", &extract_baseline, py::arg("diagram"));

  m.def("grid_model",
        [](std::size_t rows, std::size_t cols) {
          return grid_model(rows, cols);
        },
        py::arg("rows"), py::arg("cols"));
  m.def(
      "route",
      [](const Circuit& c, const HardwareModel& hw) {
        return routed_to_dict(route(c, hw));
      },
      py::arg("circuit"), py::arg("hardware"));
  m.def(
      "asp",
      [](const Circuit& c, const HardwareModel& hw) { return asp(c, hw); },
      py::arg("circuit"), py::arg("hardware"));
  m.def("delta_fidelity", &delta_fidelity, py::arg("asp_new"),
        py::arg("asp_base"));

  m.def(
      "alternating_extract",
      [](const GraphLikeDiagram& g, const HardwareModel& hw,
         const AlternatorConfig& cfg) {
        auto [routed, trace] = alternating_extract(g, hw, cfg);
        py::dict d = routed_to_dict(routed);
        d["evaluations"] = trace.evaluations;
        d["iterations"] = trace.iterations.size();
        d["trace_jsonl"] = trace.to_json_lines();
        return d;
      },
      py::arg("diagram"), py::arg("hardware"), py::arg("config"));
  m.def(
      "compare_to_baseline",
      [](const GraphLikeDiagram& g, const HardwareModel& hw,
         const AlternatorConfig& cfg) {
        const ComparisonRecord rec = compare_to_baseline(g, hw, cfg);
        py::dict d;
        d["asp_base"] = rec.baseline.asp;
        d["asp_alt"] = rec.alternating.asp;
        d["delta_fidelity"] = rec.delta_fidelity;
        d["baseline"] = routed_to_dict(rec.baseline);
        d["alternating"] = routed_to_dict(rec.alternating);
        return d;
      },
      py::arg("diagram"), py::arg("hardware"), py::arg("config"));
}
