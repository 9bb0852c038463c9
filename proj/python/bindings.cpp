// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclepack/erdos_posa.hpp"
#include "cyclepack/exact.hpp"
#include "cyclepack/generate.hpp"
#include "cyclepack/girth.hpp"
#include "cyclepack/graph_io.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/reduce.hpp"
#include "cyclepack/solver.hpp"

namespace py = pybind11;
namespace cp = cyclepack;

PYBIND11_MODULE(_cyclepack, m) {
  m.doc() = "Vertex-disjoint cycle packing";

  py::class_<cp::MultiGraph>(m, "MultiGraph")
      .def(py::init<>())
      .def("add_vertex", &cp::MultiGraph::add_vertex)
      .def("add_edge", &cp::MultiGraph::add_edge, py::arg("u"), py::arg("v"), py::arg("count") = 1)
      .def("remove_vertex", &cp::MultiGraph::remove_vertex)
      .def("multiplicity", &cp::MultiGraph::multiplicity)
      .def("loops", &cp::MultiGraph::loops)
      .def("degree", &cp::MultiGraph::degree)
      .def("has_vertex", &cp::MultiGraph::has_vertex)
      .def("num_vertices", &cp::MultiGraph::num_vertices)
      .def("num_edges", &cp::MultiGraph::num_edges)
      .def("vertices", &cp::MultiGraph::vertices)
      .def("edges",
           [](const cp::MultiGraph& g) {
             std::vector<std::tuple<cp::VertexId, cp::VertexId, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.multiplicity);
             return out;
           })
      .def("__eq__", [](const cp::MultiGraph& a, const cp::MultiGraph& b) { return a == b; })
      .def("__repr__", [](const cp::MultiGraph& g) {
        return "<MultiGraph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) { return cp::parse_graph(text); });
  m.def("emit_graph", &cp::emit_graph);
  m.def("generate", &cp::generate, py::arg("model"), py::arg("params"), py::arg("seed") = 0);
  m.def("verify_packing", &cp::verify_packing, py::arg("g"), py::arg("packing"), py::arg("k"));
  m.def("is_fvs", &cp::is_fvs);

  m.def("reduce", [](const cp::MultiGraph& g) {
    cp::ReduceResult r = cp::reduce(g);
    return py::make_tuple(r.reduced, r.pre_image);
  });
  m.def("shortest_cycle", [](const cp::MultiGraph& g) {
    auto vs = g.vertices();
    return cp::shortest_cycle_with_fvs(g, cp::VertexSet(vs.begin(), vs.end()));
  });
  m.def("girth_bruteforce", &cp::girth_bruteforce, py::arg("g"), py::arg("cap") = 60);
  m.def("max_cycle_packing_bruteforce",
        [](const cp::MultiGraph& g, int cap) {
          auto r = cp::max_cycle_packing_bruteforce(g, cap);
          return py::make_tuple(r.k_max, r.packing);
        },
        py::arg("g"), py::arg("cap") = 12);
  m.def("ie_signed_sum",
        [](const cp::MultiGraph& g, int k) { return cp::ie_signed_sum(g, k).str(); });
  m.def("ie_decide", [](const cp::MultiGraph& g, int k) { return cp::ie_decide(g, k); });
  m.def("ie_search", [](const cp::MultiGraph& g, int k) { return cp::ie_search(g, k); });
  m.def("cycles_or_fvs",
        [](const cp::MultiGraph& g, int k, std::int64_t c_override) {
          cp::EpOutcome r = cp::cycles_or_fvs(g, k, cp::EpConfig{c_override});
          py::dict d;
          d["route"] = r.route;
          if (r.cycles) {
            d["cycles"] = *r.cycles;
          } else {
            d["fvs"] = r.fvs;
          }
          return d;
        },
        py::arg("g"), py::arg("k"), py::arg("c_override") = 0);
  m.def("theorem2_constant", &cp::theorem2_constant);

  m.def("solve",
        [](const cp::MultiGraph& g, int k, const std::string& strategy,
           std::optional<std::int64_t> budget, std::int64_t c_override) {
          cp::SolveConfig cfg;
          cfg.strategy = cp::parse_strategy(strategy);
          cfg.budget = budget;
          cfg.c_override = c_override;
          cp::Decision d = cp::solve(g, k, cfg);
          py::dict out;
          out["decision"] = cp::to_string(d.verdict);
          out["k"] = d.k;
          out["packing"] = d.packing ? py::cast(*d.packing) : py::none();
          out["instances_tried"] = d.stats.instances_tried;
          out["s_size"] = d.stats.s_size;
          return out;
        },
        py::arg("g"), py::arg("k"), py::arg("strategy") = "auto",
        py::arg("budget") = py::none(), py::arg("c_override") = 0);

  py::register_exception<cp::ParseError>(m, "ParseError", PyExc_ValueError);
}
