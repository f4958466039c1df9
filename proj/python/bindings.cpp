#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dist3/classifier.hpp"
#include "dist3/corpus.hpp"
#include "dist3/distance.hpp"
#include "dist3/generators.hpp"
#include "dist3/io.hpp"
#include "dist3/oracle.hpp"
#include "dist3/parallel.hpp"
#include "dist3/structure.hpp"

namespace py = pybind11;
using namespace dist3;

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict certificate_dict(const Certificate& cert) {
  py::dict d;
  if (const auto* span = std::get_if<SpanningD3Edges>(&cert)) {
    d["type"] = "spanning_d3_edges";
    d["edges"] = edge_pairs(span->edges);
  } else {
    d["type"] = "separating_partition";
    d["blocks"] = std::get<SeparatingPartition>(cert).blocks;
  }
  return d;
}

py::dict summary_dict(const CorpusSummary& s) {
  py::dict d;
  d["instances"] = s.instances;
  d["disagreements"] = s.disagreements;
  d["cases"] = s.cases;
  py::list ces;
  for (const auto& ce : s.counterexamples) {
    py::dict c;
    c["id"] = ce.instance_id;
    c["n"] = ce.minimized.order();
    c["edges"] = edge_pairs(ce.minimized.edges());
    ces.append(c);
  }
  d["counterexamples"] = ces;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dist3, m) {
  m.doc() = "k-distance graphs and D3 connectivity of trees and unicyclic graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             require_vertex(g, v);
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("degree", [](const Graph& g, Vertex v) { return degree(g, v); })
      .def("has_edge", [](const Graph& g, Vertex u, Vertex v) { return g.contains(u) && g.contains(v) && g.has_edge(u, v); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("is_connected", &is_connected);
  m.def("diameter", &diameter);
  m.def("distances_from", [](const Graph& g, Vertex s) {
    std::vector<std::optional<std::uint32_t>> out;
    for (Distance d : bfs(g, s).dist) out.push_back(d.reachable() ? std::optional(d.hops()) : std::nullopt);
    return out;
  }, "BFS distances from s; None for unreachable vertices.");
  m.def("components", &components);

  m.def("distance_graph", &distance_graph, py::arg("g"), py::arg("k") = 3);
  m.def("power_graph", &power_graph, py::arg("g"), py::arg("k"));
  m.def("n3_set", &n3_set);

  m.def("detect_shape", [](const Graph& g) {
    Shape s = detect_shape(g);
    return py::make_tuple(std::string(to_string(s.kind)), s.cycle);
  }, "(kind, cycle) with kind in {'tree', 'unicyclic', 'other'}.");
  m.def("inner_nodes", &inner_nodes);
  m.def("build_template", [](const std::string& id) { return build_template(parse_template_id(id)).graph; },
        "Template graph by id: 'H(4)', 'G1', 'T16A', 'T16B(3)', ...");
  m.def("find_h_embedding", [](const Graph& g) -> std::optional<py::tuple> {
    auto emb = find_h_embedding(g);
    if (!emb) return std::nullopt;
    return py::make_tuple(to_string(emb->id), emb->vertex_map);
  }, "(template id, vertex map) of a 3-induced H(t) with t mod 3 != 0, or None.");

  m.def("classify", [](const Graph& g) {
    Verdict v = classify(g);
    py::dict d;
    d["connected"] = v.connected;
    d["case_tag"] = to_string(v.tag);
    d["certificate"] = certificate_dict(v.certificate);
    return d;
  });
  m.def("verify_certificate", [](const Graph& g, const py::dict& cert) {
    const auto type = cert["type"].cast<std::string>();
    if (type == "spanning_d3_edges") {
      SpanningD3Edges span;
      for (auto [u, v] : cert["edges"].cast<std::vector<std::pair<Vertex, Vertex>>>()) span.edges.emplace_back(u, v);
      return verify_certificate(g, span);
    }
    if (type == "separating_partition") return verify_certificate(g, SeparatingPartition{cert["blocks"].cast<Partition>()});
    throw py::value_error("unknown certificate type '" + type + "'");
  });
  m.def("oracle_d3_connected", [](const Graph& g) {
    OracleResult r = oracle_d3_connected(g);
    return py::make_tuple(r.connected, r.components);
  });

  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_unicyclic", &random_unicyclic, py::arg("n"), py::arg("cycle_len"), py::arg("seed"));
  m.def("fixtures", [] {
    py::list out;
    for (const Fixture& f : fixtures()) {
      py::dict d;
      d["id"] = f.id;
      d["graph"] = f.graph;
      d["expected_d3_connected"] = f.expected_d3_connected;
      d["source"] = f.source;
      out.append(d);
    }
    return out;
  });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("to_edge_list", &to_edge_list);
  m.def("to_dot", &to_dot);
  m.def("to_json", &to_json);

  m.def(
      "run_corpus",
      [](const std::string& gen, std::optional<std::size_t> n, std::optional<std::uint64_t> count, std::uint64_t seed,
         std::optional<std::size_t> cycle_len, std::optional<unsigned> jobs) {
        CorpusConfig c;
        c.generator = parse_generator(gen);
        c.n = n;
        c.count = count;
        c.seed = seed;
        c.cycle_len = cycle_len;
        std::ostringstream records;
        CorpusSummary s;
        {
          py::gil_scoped_release release;
          s = run_corpus(c, jobs.value_or(default_jobs()), &records);
        }
        return py::make_tuple(summary_dict(s), records.str());
      },
      py::arg("gen"), py::arg("n") = py::none(), py::arg("count") = py::none(), py::arg("seed") = 0,
      py::arg("cycle_len") = py::none(), py::arg("jobs") = py::none(),
      "Cross-checks classifier and oracle; returns (summary, JSON-lines records).");

  m.def(
      "verify_corollary",
      [](std::size_t max_n, std::optional<unsigned> jobs) {
        std::vector<CorollaryRow> rows;
        {
          py::gil_scoped_release release;
          rows = verify_corollary(max_n, jobs.value_or(default_jobs()));
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["n"] = r.n;
          d["labeled_graphs"] = r.labeled_graphs;
          d["connected_graphs"] = r.connected_graphs;
          d["witnesses"] = r.witnesses;
          d["cycle_witnesses"] = r.cycle_witnesses;
          out.append(d);
        }
        return py::make_tuple(corollary_holds(rows), out);
      },
      py::arg("max_n") = 7, py::arg("jobs") = py::none());
}
