#pragma once

// Test-side oracles. Nothing here calls the library's BFS, so agreement
// between the two is evidence rather than a tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "dist3/graph.hpp"

namespace testing {

using dist3::Edge;
using dist3::Graph;
using dist3::Vertex;

inline constexpr int kInf = 1 << 20;

inline Graph make(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  return Graph::from_edge_list(n, pairs);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(Vertex(i), Vertex((i + 1) % n));
  return make(n, p);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (std::size_t i = 1; i < n; ++i) p.emplace_back(Vertex(i - 1), Vertex(i));
  return make(n, p);
}

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (std::size_t i = 1; i <= leaves; ++i) p.emplace_back(0, Vertex(i));
  return make(leaves + 1, p);
}

// Floyd-Warshall over an adjacency matrix; kInf for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// D3 connectivity straight from the Floyd-Warshall table.
inline bool d3_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  auto d = floyd(g);
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i][j] == 3) uf.join(i, j);
  for (std::size_t i = 1; i < n; ++i)
    if (uf.find(i) != uf.find(0)) return false;
  return true;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<Vertex> random_perm(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing
