#include "dist3/oracle.hpp"

#include <stdexcept>

#include "dist3/distance.hpp"

namespace dist3 {

OracleResult oracle_d3_connected(const Graph& g) {
  OracleResult out;
  out.components = components(distance_graph(g, 3));
  out.connected = out.components.size() == 1;
  return out;
}

AgreementRecord cross_check(const Graph& g, std::string instance_id) {
  AgreementRecord rec;
  rec.instance_id = std::move(instance_id);
  rec.n = g.order();
  rec.shape = detect_shape(g).kind;
  const Decision d = decide(g);
  rec.classifier_connected = d.connected;
  rec.case_tag = d.tag;
  rec.oracle_connected = oracle_d3_connected(g).connected;
  rec.agree = rec.classifier_connected == rec.oracle_connected;
  return rec;
}

bool classifier_disagrees(const Graph& g) { return decide(g).connected != oracle_d3_connected(g).connected; }

namespace {

struct ShapeClass {
  ShapeKind kind;
  std::size_t cycle_len;

  explicit ShapeClass(const Graph& g) {
    Shape s = detect_shape(g);
    kind = s.kind;
    cycle_len = s.cycle.size();
  }
  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

/// g without vertex x; optionally joining x's two neighbours. Ids above x shift down.
Graph without_vertex(const Graph& g, Vertex x, bool bridge) {
  auto relabel = [x](Vertex v) { return v > x ? v - 1 : v; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u != x && e.v != x) edges.emplace_back(relabel(e.u), relabel(e.v));
  }
  if (bridge) {
    auto nb = g.neighbors(x);
    edges.emplace_back(relabel(nb[0]), relabel(nb[1]));
  }
  return Graph::from_edges(g.order() - 1, edges);
}

}  // namespace

Graph minimize_counterexample(const Graph& g, const FailurePredicate& still_fails) {
  if (!still_fails(g)) throw std::invalid_argument("instance does not exhibit the failure; nothing to minimize");
  const ShapeClass target(g);
  Graph current = g;
  bool progress = true;
  while (progress) {
    progress = false;
    const Shape shape = detect_shape(current);
    std::vector<bool> on_cycle(current.order(), false);
    for (Vertex c : shape.cycle) on_cycle[c] = true;
    for (Vertex x = 0; x < static_cast<Vertex>(current.order()) && !progress; ++x) {
      const auto deg = current.degree(x);
      const bool leaf = deg == 1 && current.order() > 2;
      const bool suppressible = deg == 2 && !on_cycle[x];
      if (!leaf && !suppressible) continue;
      Graph candidate = without_vertex(current, x, suppressible);
      if (ShapeClass(candidate) == target && still_fails(candidate)) {
        current = std::move(candidate);
        progress = true;
      }
    }
  }
  return current;
}

}  // namespace dist3
