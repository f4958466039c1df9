#include "dist3/structure.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace dist3 {

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Tree: return "tree";
    case ShapeKind::Unicyclic: return "unicyclic";
    case ShapeKind::Other: return "other";
  }
  return "other";
}

Shape detect_shape(const Graph& g) {
  const auto n = g.order();
  if (!is_connected(g)) return {};
  if (g.size() + 1 == n) return {ShapeKind::Tree, {}};
  if (g.size() != n) return {};

  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    if (deg[v] == 1) leaves.push_back(static_cast<Vertex>(v));
  }
  while (!leaves.empty()) {
    Vertex x = leaves.back();
    leaves.pop_back();
    removed[x] = true;
    for (Vertex y : g.neighbors(x)) {
      if (!removed[y] && --deg[y] == 1) leaves.push_back(y);
    }
  }

  Shape shape{ShapeKind::Unicyclic, {}};
  Vertex start = 0;
  while (removed[start]) ++start;
  Vertex prev = -1;
  Vertex cur = start;
  do {
    shape.cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex y : g.neighbors(cur)) {
      if (!removed[y] && y != prev) {
        next = y;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  return shape;
}

bool is_inner_node(const Graph& g, Vertex u) {
  if (g.degree(u) < 3) return false;
  int heavy = 0;
  for (Vertex y : g.neighbors(u)) {
    if (g.degree(y) >= 2 && ++heavy == 2) return true;
  }
  return false;
}

std::vector<Vertex> inner_nodes(const Graph& g) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (is_inner_node(g, static_cast<Vertex>(v))) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::optional<DoubleStarParams> generalized_double_star(const Graph& g) {
  if (detect_shape(g).kind != ShapeKind::Tree || g.order() < 4) return std::nullopt;
  // The non-leaf vertices must form a path with at least one edge, and only
  // its two ends may carry leaves.
  std::vector<Vertex> spine;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) >= 2) spine.push_back(static_cast<Vertex>(v));
  }
  if (spine.size() < 2) return std::nullopt;
  std::vector<Vertex> ends;
  for (Vertex s : spine) {
    std::size_t spine_neighbors = 0;
    for (Vertex y : g.neighbors(s)) spine_neighbors += g.degree(y) >= 2 ? 1 : 0;
    if (spine_neighbors > 2) return std::nullopt;
    if (spine_neighbors == 1) {
      ends.push_back(s);
    } else if (g.degree(s) != 2) {
      return std::nullopt;  // interior spine vertex with a leaf
    }
  }
  if (ends.size() != 2) return std::nullopt;
  auto leaves_at = [&](Vertex c) { return static_cast<std::uint32_t>(g.degree(c) - 1); };
  std::uint32_t m = leaves_at(ends[0]);
  std::uint32_t k = leaves_at(ends[1]);
  return DoubleStarParams{static_cast<std::uint32_t>(spine.size() - 1), std::min(m, k), std::max(m, k)};
}

// ---------------------------------------------------------------------------
// Templates

std::string to_string(const TemplateId& id) {
  switch (id.kind) {
    case TemplateKind::H: return "H(" + std::to_string(id.t) + ")";
    case TemplateKind::G1: return "G1";
    case TemplateKind::G2: return "G2";
    case TemplateKind::G3: return "G3";
    case TemplateKind::T16A: return "T16A";
    case TemplateKind::T16B: return "T16B(" + std::to_string(id.t) + ")";
  }
  return "?";
}

TemplateId parse_template_id(std::string_view text) {
  auto fail = [&]() -> TemplateId { throw std::invalid_argument("unknown template id '" + std::string(text) + "'"); };
  for (auto kind : {TemplateKind::G1, TemplateKind::G2, TemplateKind::G3, TemplateKind::T16A}) {
    if (text == to_string(TemplateId::fixed(kind))) return TemplateId::fixed(kind);
  }
  auto parametrized = [&](std::string_view prefix, TemplateKind kind) -> std::optional<TemplateId> {
    if (!text.starts_with(prefix) || !text.ends_with(")")) return std::nullopt;
    auto digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    std::uint32_t t = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
    return TemplateId{kind, t};
  };
  if (auto id = parametrized("H(", TemplateKind::H)) return *id;
  if (auto id = parametrized("T16B(", TemplateKind::T16B)) return *id;
  return fail();
}

Vertex Template::anchor(std::string_view name) const {
  for (const auto& [key, v] : anchors) {
    if (key == name) return v;
  }
  throw std::out_of_range("template " + to_string(id) + " has no anchor '" + std::string(name) + "'");
}

namespace {

struct TemplateBuilder {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<std::string, Vertex>> anchors;

  Vertex add(std::string name = {}) {
    auto v = static_cast<Vertex>(n++);
    if (!name.empty()) anchors.emplace_back(std::move(name), v);
    return v;
  }
  void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  Vertex leaf(Vertex at, std::string name = {}) {
    Vertex x = add(std::move(name));
    link(at, x);
    return x;
  }
  std::vector<Vertex> cycle(std::size_t len) {
    std::vector<Vertex> c;
    for (std::size_t i = 0; i < len; ++i) c.push_back(add("x" + std::to_string(i + 1)));
    for (std::size_t i = 0; i < len; ++i) link(c[i], c[(i + 1) % len]);
    return c;
  }
};

}  // namespace

Template build_template(const TemplateId& id) {
  if (id.parametrized() && id.t < 1) {
    throw std::invalid_argument("template " + to_string(id) + " needs t >= 1");
  }
  TemplateBuilder b;
  std::vector<Vertex> cycle;
  switch (id.kind) {
    case TemplateKind::H: {
      // Path u0..ut; pendant path a2-a1 and leaf a3 at u0; b2-b1 and b3 at ut.
      std::vector<Vertex> u;
      for (std::uint32_t i = 0; i <= id.t; ++i) {
        std::string name = i == 0 ? "u0" : (i == id.t ? "ut" : "");
        u.push_back(b.add(name));
        if (i > 0) b.link(u[i - 1], u[i]);
      }
      Vertex a1 = b.add("a1");
      Vertex a2 = b.add("a2");
      Vertex a3 = b.add("a3");
      Vertex b1 = b.add("b1");
      Vertex b2 = b.add("b2");
      Vertex b3 = b.add("b3");
      b.link(u.front(), a2);
      b.link(a2, a1);
      b.link(u.front(), a3);
      b.link(u.back(), b2);
      b.link(b2, b1);
      b.link(u.back(), b3);
      break;
    }
    case TemplateKind::G1: {
      cycle = b.cycle(4);
      for (Vertex x : cycle) b.leaf(x);
      break;
    }
    case TemplateKind::G2: {
      // Leaves on x1 and x2, pendant 2-path on x3.
      cycle = b.cycle(4);
      b.leaf(cycle[0]);
      b.leaf(cycle[1]);
      b.leaf(b.leaf(cycle[2]));
      break;
    }
    case TemplateKind::G3: {
      // Pendant 2-paths on adjacent x1 and x2.
      cycle = b.cycle(4);
      b.leaf(b.leaf(cycle[0]));
      b.leaf(b.leaf(cycle[1]));
      break;
    }
    case TemplateKind::T16A: {
      // Triangle; pendant 2-path at x1; pendant 2-path and a leaf at x2.
      cycle = b.cycle(3);
      b.leaf(b.leaf(cycle[0]));
      Vertex a = b.leaf(cycle[1], "a");
      b.leaf(a, "b");
      b.leaf(cycle[1]);
      break;
    }
    case TemplateKind::T16B: {
      // Triangle; tail x1-u1-...-u_{t+2} with leaf c at u_t; pendant 2-path x2-a-b.
      cycle = b.cycle(3);
      Vertex prev = cycle[0];
      for (std::uint32_t i = 1; i <= id.t + 2; ++i) {
        Vertex ui = b.leaf(prev, i == id.t ? "ut" : "");
        if (i == id.t) b.leaf(ui, "c");
        prev = ui;
      }
      Vertex a = b.leaf(cycle[1], "a");
      b.leaf(a, "b");
      break;
    }
  }
  return Template{id, Graph::from_edges(b.n, b.edges), std::move(b.anchors), std::move(cycle)};
}

// ---------------------------------------------------------------------------
// t-induced subgraphs

bool is_t_induced(const Graph& g, std::span<const Vertex> sub_vertices, std::span<const Edge> sub_edges,
                  std::uint32_t t) {
  const auto k = sub_vertices.size();
  std::vector<Vertex> local(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    require_vertex(g, sub_vertices[i]);
    local[sub_vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> sub_adj(k);
  for (const Edge& e : sub_edges) {
    if (!g.contains(e.u) || !g.contains(e.v) || local[e.u] < 0 || local[e.v] < 0) {
      throw std::invalid_argument("subgraph edge endpoint outside the subgraph vertex set");
    }
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("subgraph edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an edge of the host");
    }
    sub_adj[local[e.u]].push_back(local[e.v]);
    sub_adj[local[e.v]].push_back(local[e.u]);
  }

  std::vector<std::int32_t> host_dist(g.order(), -1);
  std::vector<std::int32_t> sub_dist(k, -1);
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < k; ++i) {
    // Host BFS truncated at depth t.
    queue.assign(1, sub_vertices[i]);
    host_dist[sub_vertices[i]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (host_dist[x] == static_cast<std::int32_t>(t)) continue;
      for (Vertex y : g.neighbors(x)) {
        if (host_dist[y] < 0) {
          host_dist[y] = host_dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    std::vector<Vertex> host_reached = queue;

    queue.assign(1, static_cast<Vertex>(i));
    sub_dist[i] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : sub_adj[x]) {
        if (sub_dist[y] < 0) {
          sub_dist[y] = sub_dist[x] + 1;
          queue.push_back(y);
        }
      }
    }

    bool ok = true;
    for (Vertex h : host_reached) {
      if (local[h] >= 0 && sub_dist[local[h]] != host_dist[h]) {
        ok = false;
        break;
      }
    }
    for (Vertex h : host_reached) host_dist[h] = -1;
    for (Vertex x : queue) sub_dist[x] = -1;
    if (!ok) return false;
  }
  return true;
}

Embedding make_embedding(const Graph& host, const Template& tmpl, std::vector<Vertex> vertex_map) {
  Embedding e{tmpl.id, std::move(vertex_map), true, false};
  std::vector<Edge> image;
  for (const Edge& te : tmpl.graph.edges()) {
    Vertex a = e.vertex_map[te.u];
    Vertex b = e.vertex_map[te.v];
    if (!host.has_edge(a, b)) {
      e.edge_preserving = false;
      return e;
    }
    image.emplace_back(a, b);
  }
  auto sorted = e.vertex_map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    e.edge_preserving = false;
    return e;
  }
  e.three_induced = is_3_induced(host, e.vertex_map, image);
  return e;
}

// ---------------------------------------------------------------------------
// Embedding search

namespace {

/// Parent pointers toward the cycle (unicyclic) or toward vertex 0 (tree).
struct HangingForest {
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
  std::vector<Vertex> root;
  std::vector<Vertex> cycle;
  std::vector<std::int32_t> cycle_pos;

  HangingForest(const Graph& g, const Shape& shape) : cycle(shape.cycle) {
    const auto n = g.order();
    parent.assign(n, -1);
    depth.assign(n, 0);
    root.assign(n, -1);
    cycle_pos.assign(n, -1);
    std::vector<Vertex> queue;
    if (cycle.empty()) {
      queue.push_back(0);
    } else {
      queue = cycle;
      for (std::size_t i = 0; i < cycle.size(); ++i) cycle_pos[cycle[i]] = static_cast<std::int32_t>(i);
    }
    for (Vertex r : queue) root[r] = r;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (root[y] < 0) {
          root[y] = root[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }

  /// Children of x away from the cycle / root.
  bool is_child(Vertex x, Vertex y) const { return parent[y] == x; }

  std::vector<Vertex> climb(Vertex x) const {
    std::vector<Vertex> out{x};
    while (parent[x] >= 0) {
      x = parent[x];
      out.push_back(x);
    }
    return out;
  }

  /// All simple x-y paths (one in a tree, at most two in a unicyclic graph).
  std::vector<std::vector<Vertex>> simple_paths(Vertex x, Vertex y) const {
    auto up_x = climb(x);
    auto up_y = climb(y);
    if (root[x] == root[y]) {
      while (up_x.size() >= 2 && up_y.size() >= 2 && up_x[up_x.size() - 2] == up_y[up_y.size() - 2]) {
        up_x.pop_back();
        up_y.pop_back();
      }
      std::vector<Vertex> path(up_x.begin(), up_x.end());
      path.insert(path.end(), up_y.rbegin() + 1, up_y.rend());
      return {path};
    }
    const auto len = static_cast<std::int32_t>(cycle.size());
    std::vector<std::vector<Vertex>> out;
    for (std::int32_t step : {1, -1}) {
      std::vector<Vertex> path(up_x.begin(), up_x.end() - 1);
      std::int32_t pos = cycle_pos[root[x]];
      while (cycle[pos] != root[y]) {
        path.push_back(cycle[pos]);
        pos = ((pos + step) % len + len) % len;
      }
      path.insert(path.end(), up_y.rbegin(), up_y.rend());
      out.push_back(std::move(path));
    }
    return out;
  }
};

/// Pendant structure at an H endpoint: 2-path (near, far) and a leaf.
struct Claw {
  Vertex near = -1;
  Vertex far = -1;
  Vertex leaf = -1;
};

/// Candidate claws at x avoiding `blocked`. Interchangeable degree-1
/// neighbours are collapsed to one representative.
std::vector<Claw> claws_at(const Graph& g, Vertex x, const std::vector<bool>& blocked) {
  auto options = [&](Vertex around, Vertex skip1, Vertex skip2) {
    std::vector<Vertex> out;
    bool have_leaf = false;
    for (Vertex y : g.neighbors(around)) {
      if (blocked[y] || y == skip1 || y == skip2) continue;
      if (g.degree(y) == 1) {
        if (have_leaf) continue;
        have_leaf = true;
      }
      out.push_back(y);
    }
    return out;
  };
  std::vector<Claw> out;
  for (Vertex near : g.neighbors(x)) {
    if (blocked[near] || g.degree(near) < 2) continue;
    for (Vertex far : options(near, x, -1)) {
      for (Vertex leaf : options(x, near, far)) out.push_back({near, far, leaf});
    }
  }
  return out;
}

std::optional<Embedding> search_h(const Graph& g, const Shape& shape, std::optional<std::uint32_t> exact_t) {
  if (shape.kind == ShapeKind::Other) {
    throw std::invalid_argument("H embedding search needs a tree or unicyclic graph");
  }
  const auto inner = inner_nodes(g);
  if (inner.size() < 2) return std::nullopt;
  HangingForest forest(g, shape);
  std::vector<bool> blocked(g.order(), false);

  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      for (const auto& path : forest.simple_paths(inner[i], inner[j])) {
        const auto t = static_cast<std::uint32_t>(path.size() - 1);
        if (exact_t ? t != *exact_t : t % 3 == 0) continue;
        for (Vertex p : path) blocked[p] = true;
        auto left = claws_at(g, path.front(), blocked);
        auto right = claws_at(g, path.back(), blocked);
        const Template tmpl = build_template(TemplateId::h(t));
        std::optional<Embedding> found;
        for (const Claw& a : left) {
          for (const Claw& b : right) {
            // Vertex order of build_template(H): u0..ut, a1, a2, a3, b1, b2, b3.
            std::vector<Vertex> map(path.begin(), path.end());
            map.insert(map.end(), {a.far, a.near, a.leaf, b.far, b.near, b.leaf});
            auto e = make_embedding(g, tmpl, std::move(map));
            if (e.edge_preserving && e.three_induced) {
              found = std::move(e);
              break;
            }
          }
          if (found) break;
        }
        for (Vertex p : path) blocked[p] = false;
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

/// Rooted children of every template/host vertex away from the cycle.
std::vector<std::vector<Vertex>> pendant_children(const Graph& g, const std::vector<Vertex>& cycle) {
  Shape shape{ShapeKind::Unicyclic, cycle};
  HangingForest forest(g, shape);
  std::vector<std::vector<Vertex>> kids(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (forest.parent[v] >= 0) kids[forest.parent[v]].push_back(static_cast<Vertex>(v));
  }
  return kids;
}

class PendantMatcher {
 public:
  PendantMatcher(const std::vector<std::vector<Vertex>>& tmpl_kids, const std::vector<std::vector<Vertex>>& host_kids,
                 std::vector<Vertex>& map)
      : tk_(tmpl_kids), hk_(host_kids), map_(map) {}

  /// Maps the pendant tree below template vertex tv into the one below hv.
  bool embed(Vertex tv, Vertex hv) {
    map_[tv] = hv;
    std::vector<bool> used(hk_[hv].size(), false);
    return assign(tv, hv, 0, used);
  }

 private:
  bool assign(Vertex tv, Vertex hv, std::size_t idx, std::vector<bool>& used) {
    const auto& tchildren = tk_[tv];
    if (idx == tchildren.size()) return true;
    const auto& hchildren = hk_[hv];
    for (std::size_t c = 0; c < hchildren.size(); ++c) {
      if (used[c]) continue;
      used[c] = true;
      if (embed(tchildren[idx], hchildren[c]) && assign(tv, hv, idx + 1, used)) return true;
      used[c] = false;
    }
    return false;
  }

  const std::vector<std::vector<Vertex>>& tk_;
  const std::vector<std::vector<Vertex>>& hk_;
  std::vector<Vertex>& map_;
};

}  // namespace

std::optional<Embedding> find_h_embedding(const Graph& g) { return search_h(g, detect_shape(g), std::nullopt); }

std::optional<Embedding> find_h_embedding(const Graph& g, std::uint32_t t) {
  if (t < 1) throw std::invalid_argument("H(t) needs t >= 1");
  return search_h(g, detect_shape(g), t);
}

std::optional<Embedding> find_fixed_template_embedding(const Graph& g, const TemplateId& id) {
  if (id.kind == TemplateKind::H) {
    throw std::invalid_argument("H(t) is not anchored at a cycle; use find_h_embedding");
  }
  const Template tmpl = build_template(id);
  const auto len = tmpl.cycle.size();
  const Shape shape = detect_shape(g);
  if (shape.kind != ShapeKind::Unicyclic || shape.cycle.size() != len) {
    throw std::invalid_argument("template " + to_string(id) + " needs a unicyclic host with cycle length " +
                                std::to_string(len));
  }
  if (g.order() < tmpl.graph.order()) return std::nullopt;

  const auto tmpl_kids = pendant_children(tmpl.graph, tmpl.cycle);
  const auto host_kids = pendant_children(g, shape.cycle);
  for (std::size_t rot = 0; rot < len; ++rot) {
    for (bool mirror : {false, true}) {
      std::vector<Vertex> map(tmpl.graph.order(), -1);
      PendantMatcher matcher(tmpl_kids, host_kids, map);
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i) {
        std::size_t pos = mirror ? (rot + len - i) % len : (rot + i) % len;
        ok = matcher.embed(tmpl.cycle[i], shape.cycle[pos]);
      }
      if (!ok) continue;
      auto e = make_embedding(g, tmpl, std::move(map));
      if (e.edge_preserving && e.three_induced) return e;
    }
  }
  return std::nullopt;
}

}  // namespace dist3
