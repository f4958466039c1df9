#include <set>

#include "doctest.h"
#include "dist3/distance.hpp"
#include "dist3/generators.hpp"
#include "dist3/graph.hpp"
#include "support.hpp"

using namespace dist3;
using testing::cycle;
using testing::make;
using testing::path;

namespace {

std::vector<int> hops(const DistanceVector& dv) {
  std::vector<int> out;
  for (Distance d : dv.dist) out.push_back(d.reachable() ? int(d.hops()) : -1);
  return out;
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("from_edge_list drops duplicates and validates") {
    Graph g = make(3, {{0, 1}, {1, 2}, {1, 0}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);

    Graph k1 = make(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    CHECK_THROWS_AS(make(4, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make(4, {{0, 4}}), std::out_of_range);
    CHECK_THROWS_AS(make(4, {{-1, 2}}), std::out_of_range);
  }

  TEST_CASE("adjacency is symmetric and sorted") {
    Graph g = make(5, {{4, 0}, {2, 0}, {3, 0}, {1, 2}});
    for (Vertex v = 0; v < 5; ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) CHECK(g.has_edge(w, v));
    }
    CHECK(g.degree(0) == 3);
    CHECK_FALSE(g.has_edge(1, 3));
  }

  TEST_CASE("bfs") {
    CHECK(hops(bfs(path(4), 0)) == std::vector<int>{0, 1, 2, 3});
    CHECK(hops(bfs(cycle(5), 0)) == std::vector<int>{0, 1, 2, 2, 1});
    CHECK(hops(bfs(make(2, {}), 0)) == std::vector<int>{0, -1});
    CHECK_FALSE(bfs(make(2, {}), 0).dist[1].reachable());
    CHECK_THROWS_AS(bfs(path(3), 3), std::out_of_range);
    CHECK_THROWS_AS(bfs(path(3), -1), std::out_of_range);
  }

  TEST_CASE("all_pairs_distances") {
    auto k2 = all_pairs_distances(path(2));
    CHECK(k2.at(0, 0).is(0));
    CHECK(k2.at(0, 1).is(1));
    CHECK(k2.at(1, 0).is(1));

    auto c6 = all_pairs_distances(cycle(6));
    std::uint32_t top = 0;
    for (Vertex u = 0; u < 6; ++u)
      for (Vertex v = 0; v < 6; ++v) top = std::max(top, c6.at(u, v).hops());
    CHECK(top == 3);

    auto e2 = all_pairs_distances(make(2, {}));
    CHECK(e2.at(0, 1) == Distance::unreachable());
    CHECK(e2.at(0, 0).is(0));
  }

  TEST_CASE("components and is_connected") {
    auto c7 = components(cycle(7));
    CHECK(is_connected(cycle(7)));
    REQUIRE(c7.size() == 1);
    CHECK(c7[0].size() == 7);

    Graph two = make(2, {});
    CHECK_FALSE(is_connected(two));
    CHECK(components(two) == Partition{{0}, {1}});

    Graph d3c5 = distance_graph(cycle(5), 3);
    CHECK(components(d3c5).size() == 5);

    CHECK_FALSE(is_connected(Graph{}));
    CHECK(is_connected(make(1, {})));
  }

  TEST_CASE("diameter") {
    CHECK(diameter(cycle(5)) == 2u);
    CHECK(diameter(path(2)) == 1u);
    CHECK_FALSE(diameter(make(3, {{0, 1}})).has_value());
    CHECK_FALSE(diameter(make(1, {})).has_value());
  }

  TEST_CASE("degree") {
    Graph k14 = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(degree(k14, 0) == 4);
    for (Vertex v = 0; v < 9; ++v) CHECK(degree(cycle(9), v) == 2);
    CHECK(degree(make(3, {{0, 1}}), 2) == 0);
    CHECK_THROWS_AS(degree(k14, 5), std::out_of_range);
  }

  TEST_CASE("metric properties on random graphs against Floyd-Warshall") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      Graph g = s % 2 ? random_tree(2 + s % 20, s) : random_unicyclic(5 + s % 20, 3 + s % 3, s);
      auto table = all_pairs_distances(g);
      auto fw = testing::floyd(g);
      const Vertex n = Vertex(g.order());
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          REQUIRE(int(table.at(u, v).hops()) == fw[u][v]);
          for (Vertex w = 0; w < n; ++w) CHECK(table.at(u, w).hops() <= table.at(u, v).hops() + table.at(v, w).hops());
        }
      Vertex src = Vertex(s % g.order());
      auto row = bfs(g, src);
      for (Vertex v = 0; v < n; ++v) CHECK(row.dist[v] == table.at(src, v));
      for (const Edge& e : g.edges()) {
        int du = int(row.dist[e.u].hops()), dv = int(row.dist[e.v].hops());
        CHECK(std::abs(du - dv) <= 1);
      }
    }
  }

  TEST_CASE("component blocks partition the vertex set") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      Graph g = distance_graph(random_tree(3 + s % 15, s), 3);
      std::size_t total = 0;
      std::set<Vertex> seen;
      for (const auto& block : components(g)) {
        total += block.size();
        seen.insert(block.begin(), block.end());
      }
      CHECK(total == g.order());
      CHECK(seen.size() == g.order());
    }
  }
}

TEST_SUITE("distance_ops") {
  TEST_CASE("distance_graph") {
    Graph g = random_tree(12, 3);
    CHECK(distance_graph(g, 1) == g);

    Graph d5 = distance_graph(cycle(5), 3);
    CHECK(d5.order() == 5);
    CHECK(d5.size() == 0);

    Graph d7 = distance_graph(cycle(7), 3);
    std::vector<std::pair<Vertex, Vertex>> expect;
    for (Vertex i = 0; i < 7; ++i) expect.emplace_back(i, (i + 3) % 7);
    CHECK(d7 == make(7, expect));
    CHECK(is_connected(d7));
    for (Vertex v = 0; v < 7; ++v) CHECK(d7.degree(v) == 2);

    CHECK_THROWS_AS(distance_graph(g, 0), std::invalid_argument);
  }

  TEST_CASE("power_graph") {
    CHECK(power_graph(path(3), 2) == cycle(3));
    Graph g = random_unicyclic(11, 4, 8);
    Graph full = power_graph(g, *diameter(g));
    CHECK(full.size() == g.order() * (g.order() - 1) / 2);
    Graph c6sq = power_graph(cycle(6), 2);
    for (Vertex v = 0; v < 6; ++v) CHECK(c6sq.degree(v) == 4);
    CHECK_THROWS_AS(power_graph(g, 0), std::invalid_argument);
  }

  TEST_CASE("n3_set") {
    CHECK(n3_set(cycle(7), 0) == std::vector<Vertex>{3, 4});
    CHECK(n3_set(cycle(5), 0).empty());
    CHECK(n3_set(path(2), 0).empty());
    CHECK_THROWS_AS(n3_set(path(2), 2), std::out_of_range);
  }

  TEST_CASE("D_k edges are the difference of consecutive powers") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      Graph g = s % 2 ? random_tree(4 + s, s) : random_unicyclic(5 + s, 3 + s % 5, s);
      for (std::uint32_t k = 2; k <= 5; ++k) {
        Graph pk = power_graph(g, k);
        std::set<Edge> hi(pk.edges().begin(), pk.edges().end());
        Graph lower = power_graph(g, k - 1);
        for (const Edge& e : lower.edges()) hi.erase(e);
        CHECK(std::vector<Edge>(hi.begin(), hi.end()) == distance_graph(g, k).edges());
      }
      const std::uint32_t diam = *diameter(g);
      CHECK(distance_graph(g, diam + 1).size() == 0);
      Graph d3 = distance_graph(g, 3);
      for (Vertex a = 0; a < Vertex(g.order()); ++a) {
        auto nb = d3.neighbors(a);
        CHECK(n3_set(g, a) == std::vector<Vertex>(nb.begin(), nb.end()));
      }
    }
  }

  TEST_CASE("D_k agrees with Floyd-Warshall") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      Graph g = random_unicyclic(6 + s, 3 + s % 4, s);
      auto fw = testing::floyd(g);
      for (std::uint32_t k = 1; k <= 4; ++k) {
        Graph dk = distance_graph(g, k);
        for (Vertex u = 0; u < Vertex(g.order()); ++u)
          for (Vertex v = u + 1; v < Vertex(g.order()); ++v) CHECK(dk.has_edge(u, v) == (fw[u][v] == int(k)));
      }
    }
  }
}
