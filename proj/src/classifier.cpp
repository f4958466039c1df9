#include "dist3/classifier.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "dist3/distance.hpp"

namespace dist3 {

std::string to_string(const CaseTag& tag) {
  auto with_detail = [&](std::string base) { return tag.detail.empty() ? base : base + ":" + tag.detail; };
  switch (tag.kind) {
    case CaseKind::Tree: return "T2.7";
    case CaseKind::CycleCoprime: return "T2.8";
    case CaseKind::CycleMultipleOf3: return "T2.9";
    case CaseKind::C5: return with_detail("T2.13");
    case CaseKind::C4: return with_detail("T2.15");
    case CaseKind::C3: return with_detail("T2.16");
    case CaseKind::OracleFallback: return "ORACLE_FALLBACK";
  }
  return "?";
}

namespace {

void require_cycle(const Graph& g, std::span<const Vertex> cycle, std::size_t len, bool exact) {
  if (g.size() != g.order() || (exact ? cycle.size() != len : cycle.size() < len)) {
    throw std::invalid_argument("unicyclic graph with cycle length " + std::string(exact ? "" : ">= ") +
                                std::to_string(len) + " required");
  }
}

/// True iff two of `nodes` lie at a distance not divisible by 3.
bool has_pair_off_multiple_of_3(const Graph& g, std::span<const Vertex> nodes) {
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto row = bfs(g, nodes[i]);
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (row.dist[nodes[j]].hops() % 3 != 0) return true;
    }
  }
  return false;
}

Decision oracle_decision(const Graph& g) {
  return {is_connected(distance_graph(g, 3)), {CaseKind::OracleFallback, {}}};
}

// -- five-cycle conditions ---------------------------------------------------

class FiveCycleView {
 public:
  FiveCycleView(const Graph& g, std::array<Vertex, 5> x) : g_(g), x_(x) {
    for (std::size_t i = 0; i < 5; ++i) high_ += g.degree(x[i]) >= 3 ? 1 : 0;
  }

  std::size_t deg(int i) const { return g_.degree(x_[i - 1]); }

  /// Degree with all leaf neighbours counted as one.
  std::size_t twin_reduced_deg(int i) const {
    std::size_t leaves = 0;
    for (Vertex y : g_.neighbors(x_[i - 1])) leaves += g_.degree(y) == 1 ? 1 : 0;
    return deg(i) - (leaves > 1 ? leaves - 1 : 0);
  }
  int high() const { return high_; }

  /// G - removed = T + sK1 with T the component of x1; returns T or nothing.
  std::optional<std::vector<Vertex>> tree_plus_isolated(std::initializer_list<int> removed) const {
    std::vector<bool> gone(g_.order(), false);
    for (int i : removed) gone[x_[i - 1]] = true;
    std::vector<bool> seen(g_.order(), false);
    std::vector<Vertex> tree;
    for (std::size_t root = 0; root < g_.order(); ++root) {
      if (gone[root] || seen[root]) continue;
      std::vector<Vertex> block{static_cast<Vertex>(root)};
      seen[root] = true;
      for (std::size_t head = 0; head < block.size(); ++head) {
        for (Vertex y : g_.neighbors(block[head])) {
          if (!gone[y] && !seen[y]) {
            seen[y] = true;
            block.push_back(y);
          }
        }
      }
      if (std::find(block.begin(), block.end(), x_[0]) != block.end()) {
        tree = std::move(block);
      } else if (block.size() != 1) {
        return std::nullopt;
      }
    }
    return tree;
  }

  /// Every inner node of g in `tree`, other than x1, sits at distance
  /// congruent to `residue` (mod 3) from x1.
  bool inner_residues(const std::vector<Vertex>& tree, std::uint32_t residue) const {
    auto row = bfs(g_, x_[0]);
    for (Vertex u : tree) {
      if (u != x_[0] && is_inner_node(g_, u) && row.dist[u].hops() % 3 != residue) return false;
    }
    return true;
  }

  /// G - {x4, x5}, keeping vertex ids (x4 and x5 become isolated).
  Graph without_cycle_tail() const {
    std::vector<Edge> edges;
    for (const Edge& e : g_.edges()) {
      if (e.u != x_[3] && e.u != x_[4] && e.v != x_[3] && e.v != x_[4]) edges.push_back(e);
    }
    return Graph::from_edges(g_.order(), edges);
  }

  const char* match() const {
    const std::initializer_list<int> cycle_rest{2, 3, 4, 5};
    if (high_ == 3 && twin_reduced_deg(1) == 3 && deg(2) == 2 && deg(5) == 2) {
      if (auto t = tree_plus_isolated(cycle_rest); t && inner_residues(*t, 1)) return "3i";
    }
    if (high_ == 3 && deg(3) == 2 && deg(4) == 2) {
      if (auto t = tree_plus_isolated(cycle_rest); t && inner_residues(*t, 0)) return "3ii";
    }
    if (high_ == 2 && twin_reduced_deg(1) == 3 && deg(2) == 2 && deg(3) == 2 && deg(5) == 2) {
      if (auto t = tree_plus_isolated(cycle_rest); t && inner_residues(*t, 1)) return "2i";
    }
    if (high_ == 2 && deg(2) == 2 && deg(3) == 2 && deg(4) == 2) {
      if (auto t = tree_plus_isolated(cycle_rest); t && inner_residues(*t, 0)) return "2ii";
    }
    if (high_ == 1 && deg(2) == 2 && deg(3) == 2 && deg(4) == 2 && deg(5) == 2) {
      // T = G - {x4, x5} is a tree here; inner nodes are those of T itself.
      const Graph tree = without_cycle_tail();
      if (!has_pair_off_multiple_of_3(tree, inner_nodes(tree))) return "1";
    }
    if (g_.order() == 5) return "C5";
    return nullptr;
  }

 private:
  const Graph& g_;
  std::array<Vertex, 5> x_;
  int high_ = 0;
};

}  // namespace

Decision classify_tree(const Graph& g) {
  if (g.order() < 2 || g.size() + 1 != g.order() || !is_connected(g)) {
    throw std::invalid_argument("classify_tree needs a tree with at least two vertices");
  }
  const auto inner = inner_nodes(g);
  return {has_pair_off_multiple_of_3(g, inner), {CaseKind::Tree, {}}};
}

Decision classify_c6plus_mult3(const Graph& g, std::span<const Vertex> cycle) {
  require_cycle(g, cycle, 6, false);
  if (cycle.size() % 3 != 0) throw std::invalid_argument("cycle length must be divisible by 3");
  const auto inner = inner_nodes(g);
  return {has_pair_off_multiple_of_3(g, inner), {CaseKind::CycleMultipleOf3, {}}};
}

Decision classify_c5(const Graph& g, std::span<const Vertex> cycle) {
  require_cycle(g, cycle, 5, true);
  for (std::size_t rot = 0; rot < 5; ++rot) {
    for (bool mirror : {false, true}) {
      std::array<Vertex, 5> x{};
      for (std::size_t i = 0; i < 5; ++i) x[i] = cycle[mirror ? (rot + 5 - i) % 5 : (rot + i) % 5];
      if (const char* bullet = FiveCycleView(g, x).match()) return {false, {CaseKind::C5, bullet}};
    }
  }
  return {true, {CaseKind::C5, "none"}};
}

Decision classify_c4(const Graph& g, std::span<const Vertex> cycle) {
  require_cycle(g, cycle, 4, true);
  if (auto e = find_h_embedding(g)) return {true, {CaseKind::C4, to_string(e->id)}};
  for (auto kind : {TemplateKind::G1, TemplateKind::G2, TemplateKind::G3}) {
    if (auto e = find_fixed_template_embedding(g, TemplateId::fixed(kind))) return {true, {CaseKind::C4, to_string(e->id)}};
  }
  return {false, {CaseKind::C4, "none"}};
}

Decision classify_c3(const Graph& g, std::span<const Vertex> cycle) {
  require_cycle(g, cycle, 3, true);
  if (auto e = find_h_embedding(g)) return {true, {CaseKind::C3, to_string(e->id)}};
  if (auto e = find_fixed_template_embedding(g, TemplateId::fixed(TemplateKind::T16A))) {
    return {true, {CaseKind::C3, to_string(e->id)}};
  }
  // T16B(t) has t + 8 vertices.
  for (std::uint32_t t = 1; t + 8 <= g.order(); ++t) {
    if (t % 3 == 1) continue;
    if (auto e = find_fixed_template_embedding(g, TemplateId::t16b(t))) return {true, {CaseKind::C3, to_string(e->id)}};
  }
  return {false, {CaseKind::C3, "none"}};
}

Decision classify_unicyclic(const Graph& g) {
  const Shape shape = detect_shape(g);
  if (shape.kind != ShapeKind::Unicyclic) throw std::invalid_argument("classify_unicyclic needs a unicyclic graph");
  const auto len = shape.cycle.size();
  if (len >= 7 && len % 3 != 0) return {true, {CaseKind::CycleCoprime, {}}};
  if (len >= 6 && len % 3 == 0) return classify_c6plus_mult3(g, shape.cycle);
  switch (len) {
    case 5: return classify_c5(g, shape.cycle);
    case 4: return classify_c4(g, shape.cycle);
    default: return classify_c3(g, shape.cycle);
  }
}

Decision decide(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("classification needs a connected graph");
  if (g.order() == 1) return oracle_decision(g);
  switch (detect_shape(g).kind) {
    case ShapeKind::Tree: return classify_tree(g);
    case ShapeKind::Unicyclic: return classify_unicyclic(g);
    case ShapeKind::Other: break;
  }
  return oracle_decision(g);
}

Certificate make_certificate(const Graph& g, bool connected) {
  const Graph d3 = distance_graph(g, 3);
  Partition blocks = components(d3);
  const bool truth = blocks.size() == 1;
  if (truth != connected) {
    throw std::logic_error(std::string("D3 is ") + (truth ? "connected" : "disconnected") +
                           ", contradicting the requested certificate");
  }
  if (!connected) return SeparatingPartition{std::move(blocks)};

  SpanningD3Edges out;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex y : d3.neighbors(queue[head])) {
      if (!seen[y]) {
        seen[y] = true;
        out.edges.emplace_back(queue[head], y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

Verdict classify(const Graph& g) {
  Decision d = decide(g);
  try {
    return {d.connected, d.tag, make_certificate(g, d.connected)};
  } catch (const std::logic_error& e) {
    throw ClassificationConflict(to_string(d.tag) + ": " + e.what(), d);
  }
}

bool verify_certificate(const Graph& g, const Certificate& certificate) {
  const auto n = g.order();
  if (n == 0) return false;
  const DistanceTable dist = all_pairs_distances(g);

  if (const auto* span = std::get_if<SpanningD3Edges>(&certificate)) {
    if (span->edges.size() + 1 != n) return false;
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : span->edges) {
      if (!g.contains(e.u) || !g.contains(e.v) || !dist.at(e.u, e.v).is(3)) return false;
      Vertex a = find(e.u);
      Vertex b = find(e.v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;  // n - 1 merges: spanning and connected
  }

  const auto& blocks = std::get<SeparatingPartition>(certificate).blocks;
  if (blocks.size() < 2) return false;
  std::vector<std::int32_t> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) return false;
    for (Vertex v : blocks[b]) {
      if (!g.contains(v) || block_of[v] >= 0) return false;
      block_of[v] = static_cast<std::int32_t>(b);
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) return false;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (block_of[u] != block_of[v] && dist.at(static_cast<Vertex>(u), static_cast<Vertex>(v)).is(3)) return false;
    }
  }
  return true;
}

}  // namespace dist3
