#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "doctest.h"
#include "dist3/generators.hpp"
#include "dist3/structure.hpp"
#include "support.hpp"

using namespace dist3;
using testing::cycle;
using testing::make;
using testing::path;
using testing::star;

namespace {

// Checks both embedding flags from scratch.
void check_embedding(const Graph& host, const Embedding& emb) {
  const Template tmpl = build_template(emb.id);
  REQUIRE(emb.vertex_map.size() == tmpl.graph.order());
  std::set<Vertex> image(emb.vertex_map.begin(), emb.vertex_map.end());
  CHECK(image.size() == emb.vertex_map.size());
  for (const Edge& e : tmpl.graph.edges()) CHECK(host.has_edge(emb.vertex_map[e.u], emb.vertex_map[e.v]));
  auto dh = testing::floyd(host);
  auto dt = testing::floyd(tmpl.graph);
  const std::size_t k = tmpl.graph.order();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const int d = dh[emb.vertex_map[x]][emb.vertex_map[y]];
      if (d <= 3) CHECK(dt[x][y] == d);
    }
  CHECK(emb.edge_preserving);
  CHECK(emb.three_induced);
}

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

// Direct scan: two inner nodes at a distance not divisible by 3.
bool inner_pair_not_mult3(const Graph& g) {
  auto inner = inner_nodes(g);
  auto d = testing::floyd(g);
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = i + 1; j < inner.size(); ++j)
      if (d[inner[i]][inner[j]] % 3 != 0) return true;
  return false;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("detect_shape") {
    CHECK(detect_shape(path(5)).kind == ShapeKind::Tree);
    CHECK(detect_shape(path(5)).cycle.empty());

    std::vector<std::pair<Vertex, Vertex>> c6leaf{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 6}};
    Shape s = detect_shape(make(7, c6leaf));
    CHECK(s.kind == ShapeKind::Unicyclic);
    CHECK(s.cycle.size() == 6);

    Graph k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(detect_shape(k4).kind == ShapeKind::Other);
    CHECK(detect_shape(make(4, {{0, 1}, {2, 3}})).kind == ShapeKind::Other);
    CHECK(to_string(ShapeKind::Unicyclic) == "unicyclic");
  }

  TEST_CASE("cycle is a closed walk of distinct vertices") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const std::size_t len = 3 + s % 12;
      Graph g = random_unicyclic(len + s % 9, len, s);
      Shape sh = detect_shape(g);
      REQUIRE(sh.kind == ShapeKind::Unicyclic);
      REQUIRE(sh.cycle.size() == len);
      CHECK(as_set(sh.cycle).size() == len);
      for (std::size_t i = 0; i < len; ++i) CHECK(g.has_edge(sh.cycle[i], sh.cycle[(i + 1) % len]));
    }
  }

  TEST_CASE("inner_nodes") {
    CHECK(inner_nodes(star(5)).empty());
    CHECK(inner_nodes(path(7)).empty());
    Template h4 = build_template(TemplateId::h(4));
    CHECK(as_set(inner_nodes(h4.graph)) == std::set<Vertex>{h4.anchor("u0"), h4.anchor("ut")});
  }

  TEST_CASE("H(t) has inner nodes u0, ut at distance t") {
    for (std::uint32_t t = 1; t <= 30; ++t) {
      Template h = build_template(TemplateId::h(t));
      CHECK(h.graph.order() == t + 7);
      CHECK(h.graph.size() == t + 6);
      CHECK(detect_shape(h.graph).kind == ShapeKind::Tree);
      CHECK(as_set(inner_nodes(h.graph)) == std::set<Vertex>{h.anchor("u0"), h.anchor("ut")});
      CHECK(testing::floyd(h.graph)[h.anchor("u0")][h.anchor("ut")] == int(t));
    }
  }

  TEST_CASE("generalized_double_star") {
    Graph ds = make(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(generalized_double_star(ds) == DoubleStarParams{1, 2, 3});
    CHECK(generalized_double_star(path(4)) == DoubleStarParams{1, 1, 1});
    CHECK_FALSE(generalized_double_star(star(3)).has_value());

    Graph gds = make(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}});
    CHECK(generalized_double_star(gds) == DoubleStarParams{3, 2, 2});
    CHECK_FALSE(generalized_double_star(cycle(5)).has_value());
    CHECK_FALSE(generalized_double_star(build_template(TemplateId::h(3)).graph).has_value());
  }

  TEST_CASE("build_template") {
    Template h2 = build_template(TemplateId::h(2));
    CHECK(h2.graph.order() == 9);
    CHECK(h2.graph.size() == 8);
    CHECK(detect_shape(h2.graph).kind == ShapeKind::Tree);

    for (auto kind : {TemplateKind::G1, TemplateKind::G2, TemplateKind::G3}) {
      Template g = build_template(TemplateId::fixed(kind));
      CHECK(g.graph.order() == 8);
      CHECK(g.graph.size() == 8);
      Shape s = detect_shape(g.graph);
      CHECK(s.kind == ShapeKind::Unicyclic);
      CHECK(s.cycle.size() == 4);
    }
    for (TemplateId id : {TemplateId::fixed(TemplateKind::T16A), TemplateId::t16b(1), TemplateId::t16b(3)}) {
      Shape s = detect_shape(build_template(id).graph);
      CHECK(s.kind == ShapeKind::Unicyclic);
      CHECK(s.cycle.size() == 3);
    }

    // Triangle, tail of t + 2 = 5 vertices off x1, c on u3, 2-path off x2.
    Template b3 = build_template(TemplateId::t16b(3));
    CHECK(b3.graph.order() == 3 + 5 + 1 + 2);
    CHECK(b3.graph.has_edge(b3.anchor("ut"), b3.anchor("c")));
    CHECK(b3.graph.degree(b3.anchor("c")) == 1);
    CHECK(b3.graph.has_edge(b3.anchor("x2"), b3.anchor("a")));
    CHECK(b3.graph.has_edge(b3.anchor("a"), b3.anchor("b")));
    CHECK(testing::floyd(b3.graph)[b3.anchor("x1")][b3.anchor("ut")] == 3);

    CHECK_THROWS_AS(build_template(TemplateId::h(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_template(TemplateId::t16b(0)), std::invalid_argument);
    CHECK_THROWS_AS(h2.anchor("zz"), std::out_of_range);
  }

  TEST_CASE("template ids round-trip") {
    for (TemplateId id : {TemplateId::h(4), TemplateId::fixed(TemplateKind::G2), TemplateId::fixed(TemplateKind::T16A),
                          TemplateId::t16b(5)})
      CHECK(parse_template_id(to_string(id)) == id);
    CHECK(to_string(TemplateId::h(4)) == "H(4)");
    CHECK_THROWS_AS(parse_template_id("G4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_template_id("H(x)"), std::invalid_argument);
  }

  TEST_CASE("is_3_induced") {
    std::vector<Vertex> p5{0, 1, 2, 3, 4};
    std::vector<Edge> p5e{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(is_3_induced(cycle(9), p5, p5e));
    CHECK_FALSE(is_3_induced(cycle(6), p5, p5e));

    Graph g = random_unicyclic(14, 5, 2);
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_3_induced(g, all, g.edges()));

    std::vector<Edge> bogus{{0, 2}};
    std::vector<Vertex> two{0, 2};
    CHECK_THROWS_AS(is_3_induced(cycle(6), two, bogus), std::invalid_argument);
  }

  TEST_CASE("is_3_induced matches the definition on random subpaths") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      const std::size_t len = 3 + s % 10;
      Graph g = random_unicyclic(len + 4, len, s);
      Shape sh = detect_shape(g);
      // A stretch of the cycle as the subgraph.
      const std::size_t take = 2 + s % (len - 1);
      std::vector<Vertex> verts(sh.cycle.begin(), sh.cycle.begin() + take);
      std::vector<Edge> edges;
      for (std::size_t i = 1; i < take; ++i) edges.emplace_back(verts[i - 1], verts[i]);
      auto dg = testing::floyd(g);
      bool expect = true;
      for (std::size_t i = 0; i < take; ++i)
        for (std::size_t j = 0; j < take; ++j)
          if (dg[verts[i]][verts[j]] <= 3 && dg[verts[i]][verts[j]] != int(i > j ? i - j : j - i)) expect = false;
      CHECK(is_3_induced(g, verts, edges) == expect);
    }
  }

  TEST_CASE("find_h_embedding") {
    Template h4 = build_template(TemplateId::h(4));
    auto emb = find_h_embedding(h4.graph);
    REQUIRE(emb.has_value());
    CHECK(emb->id == TemplateId::h(4));
    check_embedding(h4.graph, *emb);

    CHECK_FALSE(find_h_embedding(cycle(6)).has_value());
    CHECK_FALSE(find_h_embedding(star(6)).has_value());
    CHECK_FALSE(find_h_embedding(build_template(TemplateId::h(3)).graph).has_value());
    CHECK(find_h_embedding(build_template(TemplateId::h(3)).graph, 3).has_value());

    Graph k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(find_h_embedding(k4), std::invalid_argument);
  }

  TEST_CASE("tree H-embedding iff an inner pair sits at distance not divisible by 3") {
    for (std::size_t n = 2; n <= 7; ++n)
      enumerate_labeled_trees(n, [&](const Graph& g) {
        auto emb = find_h_embedding(g);
        REQUIRE(emb.has_value() == inner_pair_not_mult3(g));
      });
    for (std::uint64_t s = 0; s < 400; ++s) {
      Graph g = random_tree(8 + s % 30, s);
      auto emb = find_h_embedding(g);
      CHECK(emb.has_value() == inner_pair_not_mult3(g));
      if (emb) check_embedding(g, *emb);
    }
  }

  TEST_CASE("find_fixed_template_embedding") {
    for (auto kind : {TemplateKind::G1, TemplateKind::G2, TemplateKind::G3}) {
      Graph g = build_template(TemplateId::fixed(kind)).graph;
      auto emb = find_fixed_template_embedding(g, TemplateId::fixed(kind));
      REQUIRE(emb.has_value());
      check_embedding(g, *emb);
    }
    Graph c4leaf = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CHECK_FALSE(find_fixed_template_embedding(c4leaf, TemplateId::fixed(TemplateKind::G1)).has_value());

    Graph g3 = build_template(TemplateId::fixed(TemplateKind::G3)).graph;
    CHECK_FALSE(find_fixed_template_embedding(g3, TemplateId::fixed(TemplateKind::G2)).has_value());

    Graph a = build_template(TemplateId::fixed(TemplateKind::T16A)).graph;
    auto ea = find_fixed_template_embedding(a, TemplateId::fixed(TemplateKind::T16A));
    REQUIRE(ea.has_value());
    check_embedding(a, *ea);
    Graph b5 = build_template(TemplateId::t16b(5)).graph;
    auto eb = find_fixed_template_embedding(b5, TemplateId::t16b(5));
    REQUIRE(eb.has_value());
    check_embedding(b5, *eb);

    CHECK_THROWS_AS(find_fixed_template_embedding(a, TemplateId::fixed(TemplateKind::G1)), std::invalid_argument);
    CHECK_THROWS_AS(find_fixed_template_embedding(g3, TemplateId::fixed(TemplateKind::T16A)), std::invalid_argument);
    CHECK_THROWS_AS(find_fixed_template_embedding(path(5), TemplateId::fixed(TemplateKind::G1)), std::invalid_argument);
    CHECK_THROWS_AS(find_fixed_template_embedding(g3, TemplateId::h(4)), std::invalid_argument);
  }

  TEST_CASE("embeddings survive relabeling") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto kind = std::array{TemplateKind::G1, TemplateKind::G2, TemplateKind::G3}[s % 3];
      Graph g = testing::relabel(build_template(TemplateId::fixed(kind)).graph, testing::random_perm(8, s));
      auto emb = find_fixed_template_embedding(g, TemplateId::fixed(kind));
      REQUIRE(emb.has_value());
      check_embedding(g, *emb);
    }
  }
}
