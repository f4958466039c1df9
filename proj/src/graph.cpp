#include "dist3/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dist3 {

namespace {

void check_endpoint(std::size_t n, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw std::out_of_range("endpoint " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_endpoint(n, e.u);
    check_endpoint(n, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order yields sorted neighbour lists.
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  return g;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    check_endpoint(n, a);
    check_endpoint(n, b);
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  return from_edges(n, edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) + ")");
  }
}

DistanceVector bfs(const Graph& g, Vertex s) {
  require_vertex(g, s);
  DistanceVector out{s, std::vector<Distance>(g.order())};
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(s);
  out.dist[s] = Distance{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    auto next = Distance{out.dist[x].hops() + 1};
    for (Vertex y : g.neighbors(x)) {
      if (!out.dist[y].reachable()) {
        out.dist[y] = next;
        queue.push_back(y);
      }
    }
  }
  return out;
}

DistanceTable all_pairs_distances(const Graph& g) {
  const auto n = g.order();
  DistanceTable table(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto row = bfs(g, static_cast<Vertex>(s));
    for (std::size_t v = 0; v < n; ++v) table.at(static_cast<Vertex>(s), static_cast<Vertex>(v)) = row.dist[v];
  }
  return table;
}

Partition components(const Graph& g) {
  const auto n = g.order();
  std::vector<bool> seen(n, false);
  Partition blocks;
  std::vector<Vertex> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> block;
    seen[root] = true;
    stack.push_back(static_cast<Vertex>(root));
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto d = bfs(g, 0);
  return std::all_of(d.dist.begin(), d.dist.end(), [](Distance x) { return x.reachable(); });
}

std::optional<std::uint32_t> diameter(const Graph& g) {
  if (g.order() <= 1 || !is_connected(g)) return std::nullopt;
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (Distance d : bfs(g, static_cast<Vertex>(s)).dist) best = std::max(best, d.hops());
  }
  return best;
}

std::size_t degree(const Graph& g, Vertex v) {
  require_vertex(g, v);
  return g.degree(v);
}

}  // namespace dist3
