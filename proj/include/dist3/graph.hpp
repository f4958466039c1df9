#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dist3 {

using Vertex = std::int32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Shortest-path length, or the explicit "unreachable" state.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : value_(static_cast<std::int32_t>(hops)) {}

  static constexpr Distance unreachable() { return Distance{}; }

  constexpr bool reachable() const { return value_ >= 0; }
  /// Precondition: reachable().
  constexpr std::uint32_t hops() const { return static_cast<std::uint32_t>(value_); }

  constexpr bool is(std::uint32_t hops) const { return value_ == static_cast<std::int32_t>(hops); }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  std::int32_t value_ = -1;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from vertex pairs. Duplicate pairs (in either orientation)
  /// collapse to one edge. Throws std::invalid_argument on a self-loop and
  /// std::out_of_range on an endpoint outside [0, n).
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return edges_.size(); }

  /// Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  /// Edges in lexicographic order, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

struct DistanceVector {
  Vertex source = 0;
  std::vector<Distance> dist;
};

/// Row-major n x n table of shortest-path distances.
class DistanceTable {
 public:
  explicit DistanceTable(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t order() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return cells_[static_cast<std::size_t>(u) * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return cells_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<Distance> cells_;
};

using Partition = std::vector<std::vector<Vertex>>;

/// Throws std::out_of_range if s is not a vertex of g.
DistanceVector bfs(const Graph& g, Vertex s);
DistanceTable all_pairs_distances(const Graph& g);

/// Connected components, each block sorted, blocks ordered by smallest member.
Partition components(const Graph& g);
/// False for the empty graph.
bool is_connected(const Graph& g);
/// Undefined (nullopt) for disconnected graphs and for n <= 1.
std::optional<std::uint32_t> diameter(const Graph& g);
std::size_t degree(const Graph& g, Vertex v);

/// Throws std::out_of_range unless v is a vertex of g.
void require_vertex(const Graph& g, Vertex v);

}  // namespace dist3
