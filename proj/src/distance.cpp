#include "dist3/distance.hpp"

#include <stdexcept>

namespace dist3 {

namespace {

template <typename Keep>
Graph threshold_graph(const Graph& g, Keep keep) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs(g, s);
    for (Vertex v = s + 1; v < n; ++v) {
      if (row.dist[v].reachable() && keep(row.dist[v].hops())) edges.emplace_back(s, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

void require_positive(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("k must be a positive integer");
}

}  // namespace

Graph distance_graph(const Graph& g, std::uint32_t k) {
  require_positive(k);
  return threshold_graph(g, [k](std::uint32_t d) { return d == k; });
}

Graph power_graph(const Graph& g, std::uint32_t k) {
  require_positive(k);
  return threshold_graph(g, [k](std::uint32_t d) { return d >= 1 && d <= k; });
}

std::vector<Vertex> n3_set(const Graph& g, Vertex a) {
  auto row = bfs(g, a);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < row.dist.size(); ++v) {
    if (row.dist[v].is(3)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace dist3
