#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jr/cover.hpp"
#include "jr/explicit.hpp"
#include "jr/generate.hpp"
#include "jr/graph_io.hpp"
#include "jr/jr_index.hpp"
#include "jr/minimal.hpp"

namespace py = pybind11;
using namespace jr;

namespace {

std::vector<Arc> arc_list(const Digraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

Digraph make_digraph(Vertex n, std::vector<Arc> arcs, const std::string& kind,
                     std::optional<std::vector<std::vector<Vertex>>> order) {
  if (order) {
    if (kind != "planar-st") throw Error("an out-arc order requires kind planar-st");
    return Digraph(n, std::move(arcs), std::move(*order));
  }
  return Digraph(n, std::move(arcs), parse_kind(kind));
}

}  // namespace

PYBIND11_MODULE(jrgraph, m) {
  m.doc() = "Join-reachability graphs and query indexes for pairs of digraphs";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs"),
           py::arg("kind") = "digraph", py::arg("out_order") = py::none())
      .def_property_readonly("n", &Digraph::n)
      .def_property_readonly("m", &Digraph::m)
      .def_property_readonly("size", &Digraph::size)
      .def_property_readonly("kind", [](const Digraph& g) { return std::string(kind_name(g.kind())); })
      .def_property_readonly("arcs", &arc_list)
      .def("out", [](const Digraph& g, Vertex v) {
        if (!g.contains(v)) throw Error("vertex out of range");
        auto s = g.out(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("reversed", &Digraph::reversed)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("to_text", [](const Digraph& g) {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
      })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
      })
      .def("__repr__", [](const Digraph& g) {
        return "<Digraph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + " " +
               std::string(kind_name(g.kind())) + ">";
      });

  m.def("load_graph", [](const std::string& p) { return load_graph(p); });
  m.def("save_graph", [](const std::string& p, const Digraph& g) { save_graph(p, g); });

  py::class_<SteinerTag>(m, "SteinerTag")
      .def_readonly("group", &SteinerTag::group)
      .def_readonly("depth", &SteinerTag::depth)
      .def_readonly("dim", &SteinerTag::dim)
      .def_readonly("side", &SteinerTag::side)
      .def_readonly("lo", &SteinerTag::lo)
      .def_readonly("mid", &SteinerTag::mid)
      .def_readonly("hi", &SteinerTag::hi);

  py::class_<JoinGraph>(m, "JoinGraph")
      .def_readonly("graph", &JoinGraph::graph)
      .def_readonly("original_count", &JoinGraph::original_count)
      .def_readonly("steiner", &JoinGraph::steiner)
      .def_property_readonly("steiner_count", &JoinGraph::steiner_count)
      .def_property_readonly("size", &JoinGraph::size);

  m.def("build_two_paths", &build_two_paths);
  m.def("build_tree_path", &build_tree_path);
  m.def("build_two_trees", &build_two_trees);
  m.def("build_unoriented_trees", &build_unoriented_trees);
  m.def("build_pathcover", &build_pathcover);
  m.def("minimal_restricted_join", &minimal_restricted_join);
  m.def("load_join_graph", [](const std::string& p) { return load_join_graph(p); });
  m.def("save_join_graph", [](const std::string& p, const JoinGraph& j) { save_join_graph(p, j); });

  m.def(
      "verify",
      [](const JoinGraph& j, const Digraph& g1, const Digraph& g2) {
        VerifyReport r = verify_join_graph(j, g1, g2);
        py::dict out;
        out["ok"] = r.ok;
        if (!r.ok) {
          out["pair"] = py::make_tuple(r.a, r.b);
          out["in_join"] = r.in_join;
          out["expected"] = r.expected;
        }
        return out;
      },
      "Checks a join graph against the closure AND of the inputs.");

  m.def("join_reachability", [](const Digraph& g1, const Digraph& g2) {
    if (g1.n() != g2.n()) throw Error("vertex count mismatch");
    auto r1 = transitive_closure(g1);
    auto r2 = transitive_closure(g2);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < g1.n(); ++a) {
      for (Vertex b = 0; b < g1.n(); ++b) {
        if (r1.reach(a, b) && r2.reach(a, b)) pairs.emplace_back(a, b);
      }
    }
    return pairs;
  });

  py::class_<JRIndex>(m, "Index")
      .def_property_readonly("variant",
                             [](const JRIndex& i) { return std::string(index_class_name(i.variant())); })
      .def_property_readonly("n", &JRIndex::n)
      .def_property_readonly("structure_count", &JRIndex::structure_count)
      .def("query", [](const JRIndex& i, Vertex b) { return i.query(b); })
      .def("query_with_stats", [](const JRIndex& i, Vertex b) {
        QueryStats st;
        auto out = i.query(b, &st);
        return py::make_tuple(out, st.visits, st.probes);
      });

  m.def(
      "build_index",
      [](const std::string& cls, const Digraph& g1, const Digraph& g2) {
        return build_index(parse_index_class(cls), g1, g2);
      },
      py::arg("cls"), py::arg("g1"), py::arg("g2"));

  m.def("kameda_labels", [](const Digraph& g) {
    auto l = kameda_labels(g);
    return py::make_tuple(l.l1, l.l2);
  });

  m.def("min_path_cover", [](const Digraph& g) { return min_path_cover(g).paths; });

  m.def(
      "generate",
      [](const std::string& kind, Vertex n, std::uint64_t seed, int count, double p) {
        return generate({parse_gen_kind(kind), n, seed, p}, count);
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("count") = 1,
      py::arg("p") = 0.1);
  m.def("gen_bitreversal", [](Vertex n) {
    auto [a, b] = gen_bitreversal(n);
    return py::make_tuple(a, b);
  });
}
