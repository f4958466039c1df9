#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dist3/graph.hpp"

namespace dist3 {

/// Standard Prüfer bijection. decode needs seq.size() == n - 2 and entries in
/// [0, n); encode needs a tree on at least two vertices. Both throw
/// std::invalid_argument otherwise.
Graph prufer_decode(std::span<const Vertex> seq, std::size_t n);
std::vector<Vertex> prufer_encode(const Graph& tree);

/// Uniform labeled tree on n >= 2 vertices, deterministic in seed.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Cycle of length cycle_len on random labels, then every remaining vertex is
/// hung from a uniformly chosen earlier vertex. Deterministic in seed; not
/// uniform over labeled unicyclic graphs.
Graph random_unicyclic(std::size_t n, std::size_t cycle_len, std::uint64_t seed);

/// Mixes a base seed with an instance index (splitmix64), so instance i of a
/// corpus is reproducible regardless of how the corpus is split into chunks.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

using GraphVisitor = std::function<void(const Graph&)>;

inline constexpr std::size_t kMaxEnumeratedGraphOrder = 7;
inline constexpr std::size_t kMaxEnumeratedTreeOrder = 9;

/// Number of labeled graphs on n vertices: 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(std::size_t n);

/// Every labeled simple graph on n <= 7 vertices once, by edge bitmask (bit k
/// is the k-th pair (i, j), i < j, in lexicographic order). The range form
/// visits masks in [first, last). Throws std::invalid_argument for n > 7.
void enumerate_labeled_graphs(std::size_t n, bool connected_only, const GraphVisitor& visit);
void enumerate_labeled_graphs(std::size_t n, bool connected_only, std::uint64_t first, std::uint64_t last,
                              const GraphVisitor& visit);

/// n^(n-2) for n >= 2; 1 for n == 1.
std::uint64_t labeled_tree_count(std::size_t n);

/// Every labeled tree on n <= 9 vertices once, via Prüfer sequences in
/// lexicographic order. The range form visits sequence indices in [first, last).
void enumerate_labeled_trees(std::size_t n, const GraphVisitor& visit);
void enumerate_labeled_trees(std::size_t n, std::uint64_t first, std::uint64_t last, const GraphVisitor& visit);

/// Every labeled unicyclic graph on n <= 9 vertices once: a tree plus a
/// non-edge, kept only when the added edge is the largest edge of the cycle
/// it closes. The range form walks the trees with index in [first, last).
void enumerate_unicyclic(std::size_t n, const GraphVisitor& visit);
void enumerate_unicyclic(std::size_t n, std::uint64_t first_tree, std::uint64_t last_tree, const GraphVisitor& visit);

struct Fixture {
  std::string id;
  Graph graph;
  bool expected_d3_connected = true;
  std::string source;
};

/// Named witness graphs, each with its expected D3 connectivity.
std::vector<Fixture> fixtures();

}  // namespace dist3
