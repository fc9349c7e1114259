#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bramblekit/bramble.hpp"
#include "bramblekit/fpt.hpp"
#include "bramblekit/generators.hpp"
#include "bramblekit/gridlike.hpp"
#include "bramblekit/perfect.hpp"
#include "bramblekit/web.hpp"
#include "bramblekit/witness.hpp"

namespace py = pybind11;
using namespace bk;

namespace {

// Witness documents cross the boundary as JSON text; the Python side parses them.
Constants config(const std::string& text) {
  return text.empty() ? Constants::desk() : constants_from_json(Json::parse(text));
}

std::string witness(const Graph& g, const std::string& kind, Json payload, const std::string& algorithm,
                    std::uint64_t seed, const Constants& cfg) {
  return make_witness(g, "edgelist", kind, std::move(payload), algorithm, seed, cfg).dump();
}

std::string td_witness(const Graph& g, const TreeDecomposition& td, const std::string& algorithm, std::uint64_t seed,
                       const Constants& cfg) {
  return witness(g, "tree-decomposition", decomposition_to_json(td, false), algorithm, seed, cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Brambles, webs, grid-like minors and perfect brambles";
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph::from_pairs(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("grid", &grid, py::arg("l"));
  m.def("complete", &complete, py::arg("n"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("m"), py::arg("seed") = 0);

  m.def("default_constants", [] { return constants_to_json(Constants::desk()).dump(); });

  m.def(
      "treewidth",
      [](const Graph& g, bool exact, const std::string& cfg_text) {
        const Constants cfg = config(cfg_text);
        if (exact) {
          ExactTreewidth ex = exact_treewidth(g, cfg.exact_treewidth_cap);
          return witness(g, "tree-decomposition", decomposition_to_json(ex.td, true), "exact-treewidth", 0, cfg);
        }
        return td_witness(g, approximate_treewidth(g, cfg).td, "approximate-treewidth", 0, cfg);
      },
      py::arg("g"), py::arg("exact") = true, py::arg("config") = "");

  m.def(
      "find_bramble",
      [](const Graph& g, std::uint64_t seed, const std::string& cfg_text) {
        const Constants cfg = config(cfg_text);
        FindBrambleResult r = find_bramble(g, cfg, seed);
        return witness(g, "bramble", bramble_to_json(r.bramble), "find-bramble", seed, cfg);
      },
      py::arg("g"), py::arg("seed") = 0, py::arg("config") = "");

  m.def(
      "web",
      [](const Graph& g, int k, int h, const std::string& cfg_text) {
        const Constants cfg = config(cfg_text);
        WebOrDecomposition wd = build_web_or_decomposition(g, k, h, cfg);
        if (auto* td = std::get_if<TreeDecomposition>(&wd)) return td_witness(g, *td, "web-or-decomposition", 0, cfg);
        return witness(g, "kweb", web_to_json(std::get<KWeb>(wd)), "web-or-decomposition", 0, cfg);
      },
      py::arg("g"), py::arg("k"), py::arg("h"), py::arg("config") = "");

  m.def(
      "gridlike",
      [](const Graph& g, int p, std::uint64_t seed, const std::string& cfg_text) -> py::object {
        const Constants cfg = config(cfg_text);
        PipelineResult r = gridlike_pipeline(g, p, cfg, seed);
        if (r.gridlike) return py::str(witness(g, "gridlike", gridlike_to_json(*r.gridlike), "gridlike-pipeline", seed, cfg));
        if (r.counter_witness) return py::str(td_witness(g, *r.counter_witness, "gridlike-pipeline", seed, cfg));
        return py::none();
      },
      py::arg("g"), py::arg("p"), py::arg("seed") = 0, py::arg("config") = "");

  m.def(
      "perfect",
      [](const Graph& g, int order, std::uint64_t seed, const std::string& cfg_text) -> py::object {
        const Constants cfg = config(cfg_text);
        BoundedDegreeResult r = bounded_degree_subgraph(g, order, cfg, seed);
        if (r.bramble) {
          return py::str(witness(g, "perfect-bramble", perfect_to_json(*r.bramble, cfg), "bounded-degree-subgraph",
                                 seed, cfg));
        }
        if (r.pipeline.counter_witness) {
          return py::str(td_witness(g, *r.pipeline.counter_witness, "bounded-degree-subgraph", seed, cfg));
        }
        return py::none();
      },
      py::arg("g"), py::arg("order"), py::arg("seed") = 0, py::arg("config") = "");

  m.def(
      "fpt_solve",
      [](const Graph& g, const std::string& parameter, int k, std::uint64_t seed, const std::string& cfg_text) {
        const Constants cfg = config(cfg_text);
        DichotomyResult r = decide(g, plugin_by_name(parameter), k, cfg, seed);
        return witness(g, "dichotomy", dichotomy_to_json(r, parameter, cfg), "decide", seed, cfg);
      },
      py::arg("g"), py::arg("parameter"), py::arg("k"), py::arg("seed") = 0, py::arg("config") = "");

  m.def(
      "verify",
      [](const Graph& g, const std::string& doc) -> std::optional<std::string> {
        return verify_witness(g, Json::parse(doc));
      },
      py::arg("g"), py::arg("doc"), "None when valid, otherwise the first violation.");

  m.def("brute_force_vertex_cover", &brute_force_vertex_cover);
  m.def("brute_force_longest_path", &brute_force_longest_path);
}
