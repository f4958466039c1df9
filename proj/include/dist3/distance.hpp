#pragma once

#include <cstdint>
#include <vector>

#include "dist3/graph.hpp"

namespace dist3 {

/// D_k(g): same vertex set, u ~ v iff d_g(u, v) == k. Throws std::invalid_argument for k == 0.
Graph distance_graph(const Graph& g, std::uint32_t k);

/// g^k: u ~ v iff 1 <= d_g(u, v) <= k. Throws std::invalid_argument for k == 0.
Graph power_graph(const Graph& g, std::uint32_t k);

/// Vertices at distance exactly 3 from a, ascending.
std::vector<Vertex> n3_set(const Graph& g, Vertex a);

}  // namespace dist3
