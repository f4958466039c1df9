#include "dist3/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dist3/structure.hpp"

namespace dist3 {

Graph prufer_decode(std::span<const Vertex> seq, std::size_t n) {
  if (n < 2 || seq.size() != n - 2) {
    throw std::invalid_argument("Prüfer sequence for n = " + std::to_string(n) + " must have length n - 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("Prüfer entry " + std::to_string(v) + " outside [0, n)");
    }
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  auto leaf = static_cast<Vertex>(ptr);
  for (Vertex v : seq) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && static_cast<std::size_t>(v) < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  edges.emplace_back(leaf, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

std::vector<Vertex> prufer_encode(const Graph& tree) {
  const auto n = tree.order();
  if (n < 2 || tree.size() + 1 != n || !is_connected(tree)) {
    throw std::invalid_argument("Prüfer encoding needs a tree on at least two vertices");
  }
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> stack{static_cast<Vertex>(n - 1)};
  std::vector<bool> seen(n, false);
  seen[n - 1] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : tree.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = tree.degree(static_cast<Vertex>(v));

  std::vector<Vertex> seq;
  seq.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  auto leaf = static_cast<Vertex>(ptr);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    Vertex next = parent[leaf];
    seq.push_back(next);
    if (--degree[next] == 1 && static_cast<std::size_t>(next) < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  return seq;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (Vertex& v : seq) v = pick(rng);
  return prufer_decode(seq, n);
}

Graph random_unicyclic(std::size_t n, std::size_t cycle_len, std::uint64_t seed) {
  if (cycle_len < 3 || cycle_len > n) {
    throw std::invalid_argument("random_unicyclic needs 3 <= cycle_len <= n");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle_len; ++i) edges.emplace_back(label[i], label[(i + 1) % cycle_len]);
  for (std::size_t i = cycle_len; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(label[i], label[pick(rng)]);
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace {

void check_order(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw std::invalid_argument(std::string(what) + " enumeration is limited to n <= " + std::to_string(limit));
  }
}

std::vector<Edge> vertex_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return pairs;
}

bool mask_connected(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  if (n == 0) return false;
  std::array<std::uint32_t, kMaxEnumeratedGraphOrder> adj{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask >> k & 1U) {
      adj[pairs[k].u] |= 1U << pairs[k].v;
      adj[pairs[k].v] |= 1U << pairs[k].u;
    }
  }
  std::uint32_t reached = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (frontier >> v & 1U) next |= adj[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1U << n) - 1;
}

/// Prüfer digits (most significant first) of a tree index.
std::vector<Vertex> tree_digits(std::size_t n, std::uint64_t index) {
  std::vector<Vertex> digits(n - 2);
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return digits;
}

}  // namespace

std::uint64_t labeled_graph_count(std::size_t n) { return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2); }

void enumerate_labeled_graphs(std::size_t n, bool connected_only, const GraphVisitor& visit) {
  check_order(n, kMaxEnumeratedGraphOrder, "labeled graph");
  enumerate_labeled_graphs(n, connected_only, 0, labeled_graph_count(n), visit);
}

void enumerate_labeled_graphs(std::size_t n, bool connected_only, std::uint64_t first, std::uint64_t last,
                              const GraphVisitor& visit) {
  check_order(n, kMaxEnumeratedGraphOrder, "labeled graph");
  const auto pairs = vertex_pairs(n);
  last = std::min(last, labeled_graph_count(n));
  std::vector<Edge> edges;
  for (std::uint64_t mask = first; mask < last; ++mask) {
    if (connected_only && !mask_connected(n, pairs, mask)) continue;
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1U) edges.push_back(pairs[k]);
    }
    visit(Graph::from_edges(n, edges));
  }
}

std::uint64_t labeled_tree_count(std::size_t n) {
  if (n <= 2) return n == 0 ? 0 : 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) count *= n;
  return count;
}

void enumerate_labeled_trees(std::size_t n, const GraphVisitor& visit) {
  check_order(n, kMaxEnumeratedTreeOrder, "labeled tree");
  enumerate_labeled_trees(n, 0, labeled_tree_count(n), visit);
}

void enumerate_labeled_trees(std::size_t n, std::uint64_t first, std::uint64_t last, const GraphVisitor& visit) {
  check_order(n, kMaxEnumeratedTreeOrder, "labeled tree");
  last = std::min(last, labeled_tree_count(n));
  if (first >= last) return;
  if (n == 1) {
    visit(Graph::from_edges(1, {}));
    return;
  }
  if (n == 2) {
    const Edge e(0, 1);
    visit(Graph::from_edges(2, std::span<const Edge>(&e, 1)));
    return;
  }
  auto digits = tree_digits(n, first);
  for (std::uint64_t index = first; index < last; ++index) {
    visit(prufer_decode(digits, n));
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (static_cast<std::size_t>(++digits[i]) < n) break;
      digits[i] = 0;
    }
  }
}

void enumerate_unicyclic(std::size_t n, const GraphVisitor& visit) {
  check_order(n, kMaxEnumeratedTreeOrder, "unicyclic graph");
  enumerate_unicyclic(n, 0, labeled_tree_count(n), visit);
}

void enumerate_unicyclic(std::size_t n, std::uint64_t first_tree, std::uint64_t last_tree, const GraphVisitor& visit) {
  check_order(n, kMaxEnumeratedTreeOrder, "unicyclic graph");
  if (n < 3) return;
  // Largest tree edge on the path from a to every other vertex.
  std::vector<Edge> max_on_path(n);
  std::vector<bool> seen(n);
  std::vector<Vertex> stack;
  enumerate_labeled_trees(n, first_tree, last_tree, [&](const Graph& tree) {
    for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
      std::fill(seen.begin(), seen.end(), false);
      seen[a] = true;
      max_on_path[a] = Edge{};
      stack.assign(1, a);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : tree.neighbors(x)) {
          if (seen[y]) continue;
          seen[y] = true;
          max_on_path[y] = std::max(max_on_path[x], Edge(x, y));
          stack.push_back(y);
        }
      }
      for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b) {
        const Edge closing(a, b);
        if (tree.has_edge(a, b) || max_on_path[b] > closing) continue;
        std::vector<Edge> edges = tree.edges();
        edges.push_back(closing);
        visit(Graph::from_edges(n, edges));
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Fixture catalog

namespace {

class FixtureBuilder {
 public:
  explicit FixtureBuilder(std::size_t cycle_len) {
    for (std::size_t i = 0; i < cycle_len; ++i) add();
    for (std::size_t i = 0; i < cycle_len; ++i) {
      link(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % cycle_len));
    }
  }

  Vertex add() { return static_cast<Vertex>(n_++); }
  void link(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
  Vertex leaf(Vertex at) {
    Vertex x = add();
    link(at, x);
    return x;
  }
  /// Pendant path of `len` edges at `at`; returns the vertices in order.
  std::vector<Vertex> tail(Vertex at, std::size_t len) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(at = leaf(at));
    return out;
  }
  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

Fixture from_template(const TemplateId& id, const char* source) {
  return {to_string(id), build_template(id).graph, true, source};
}

/// Five-cycle x1..x5 (ids 0..4), leaf y at x3, tail of 3k + 2 at x1 with a leaf at its (3k)-th vertex.
Graph five_cycle_far_leaf(std::uint32_t k) {
  FixtureBuilder b(5);
  b.leaf(2);
  auto u = b.tail(0, 3 * k + 2);
  b.leaf(u[3 * k - 1]);
  return b.build();
}

/// Five-cycle, leaf y at x2, tail of 3k + 3 at x1 with a leaf at its (3k+1)-th vertex.
Graph five_cycle_near_leaf(std::uint32_t k) {
  FixtureBuilder b(5);
  b.leaf(1);
  auto u = b.tail(0, 3 * k + 3);
  b.leaf(u[3 * k]);
  return b.build();
}

/// Four-cycle, leaf at x2, tail of 3k + 3 at x1 with a leaf at its (3k+1)-th vertex.
Graph four_cycle_near_leaf(std::uint32_t k) {
  FixtureBuilder b(4);
  b.leaf(1);
  auto u = b.tail(0, 3 * k + 3);
  b.leaf(u[3 * k]);
  return b.build();
}

}  // namespace

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  auto five = [&](const char* id, const char* source, auto decorate) {
    FixtureBuilder b(5);
    decorate(b);
    out.push_back({id, b.build(), true, source});
  };
  // Five-cycle x1..x5 = ids 0..4.
  five("L10_1", "C5, pendant 2-paths at x1 and x3", [](FixtureBuilder& b) {
    b.tail(0, 2);
    b.tail(2, 2);
  });
  five("L10_2", "C5, leaves at x1, x2, x3, x5", [](FixtureBuilder& b) {
    for (Vertex x : {0, 1, 2, 4}) b.leaf(x);
  });
  five("L10_3", "C5, pendant 2-paths at adjacent x1 and x2", [](FixtureBuilder& b) {
    b.tail(0, 2);
    b.tail(1, 2);
  });
  five("L10_4", "C5, pendant 2-path at x1, leaves at x2 and x3", [](FixtureBuilder& b) {
    b.tail(0, 2);
    b.leaf(1);
    b.leaf(2);
  });
  five("L10_5", "C5, pendant 2-path at x1, leaves at x2 and x4", [](FixtureBuilder& b) {
    b.tail(0, 2);
    b.leaf(1);
    b.leaf(3);
  });
  five("L10_6", "C5, leaf at x1, leaf and pendant 2-path at x3", [](FixtureBuilder& b) {
    b.leaf(0);
    b.leaf(2);
    b.tail(2, 2);
  });
  five("L10_7", "C5, leaves at x1 and x5, leaf and pendant 2-path at x3", [](FixtureBuilder& b) {
    b.leaf(0);
    b.leaf(4);
    b.leaf(2);
    b.tail(2, 2);
  });

  {
    FixtureBuilder b(6);
    b.leaf(1);
    b.leaf(5);
    out.push_back({"T9C2_1", b.build(), true, "C6, leaves at two cycle vertices at distance 2"});
  }
  {
    FixtureBuilder b(6);
    b.leaf(3);
    b.leaf(4);
    out.push_back({"T9C2_2", b.build(), true, "C6, leaves at two adjacent cycle vertices"});
  }

  out.push_back(from_template(TemplateId::fixed(TemplateKind::G1), "C4 witness G1"));
  out.push_back(from_template(TemplateId::fixed(TemplateKind::G2), "C4 witness G2"));
  out.push_back(from_template(TemplateId::fixed(TemplateKind::G3), "C4 witness G3"));
  out.push_back(from_template(TemplateId::fixed(TemplateKind::T16A), "C3 witness, first drawing"));
  out.push_back(from_template(TemplateId::t16b(3), "C3 witness, parametrized drawing, t = 3"));
  out.push_back(from_template(TemplateId::t16b(5), "C3 witness, parametrized drawing, t = 5"));
  out.push_back(from_template(TemplateId::h(4), "H_t family, t = 4"));
  out.push_back(from_template(TemplateId::h(5), "H_t family, t = 5"));

  for (std::uint32_t k : {1U, 2U}) {
    const auto suffix = "(" + std::to_string(k) + ")";
    out.push_back({"L11" + suffix, five_cycle_far_leaf(k), true,
                   "C5, high degree at x1 and x3, inner node at distance 3k from x1"});
    out.push_back({"L12" + suffix, five_cycle_near_leaf(k), true,
                   "C5, high degree at x1 and x2, inner node at distance 3k+1 from x1"});
    out.push_back({"L14" + suffix, four_cycle_near_leaf(k), true,
                   "C4, high degree at x1 and x2, inner node at distance 3k+1 from x1"});
  }
  return out;
}

}  // namespace dist3
