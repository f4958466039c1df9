#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dist3/graph.hpp"

namespace dist3 {

enum class ShapeKind { Tree, Unicyclic, Other };

std::string_view to_string(ShapeKind kind);

struct Shape {
  ShapeKind kind = ShapeKind::Other;
  /// The unique cycle in traversal order; empty unless kind == Unicyclic.
  std::vector<Vertex> cycle;
};

/// Tree / unicyclic / other. The cycle is found by peeling degree-1 vertices.
Shape detect_shape(const Graph& g);

/// deg(u) >= 3 with at least two neighbours of degree >= 2 (degrees in g).
bool is_inner_node(const Graph& g, Vertex u);
std::vector<Vertex> inner_nodes(const Graph& g);

/// GDS(l, m, n): stars K_{1,m} and K_{1,n} whose centres are joined by a path of length l.
struct DoubleStarParams {
  std::uint32_t path_length = 0;
  std::uint32_t first_leaves = 0;   // the smaller of the two leaf counts
  std::uint32_t second_leaves = 0;

  friend bool operator==(const DoubleStarParams&, const DoubleStarParams&) = default;
};

std::optional<DoubleStarParams> generalized_double_star(const Graph& g);

enum class TemplateKind { H, G1, G2, G3, T16A, T16B };

/// Names one of the fixed connectivity witnesses. `t` is used by H and T16B only.
struct TemplateId {
  TemplateKind kind = TemplateKind::H;
  std::uint32_t t = 0;

  static TemplateId h(std::uint32_t t) { return {TemplateKind::H, t}; }
  static TemplateId t16b(std::uint32_t t) { return {TemplateKind::T16B, t}; }
  static TemplateId fixed(TemplateKind kind) { return {kind, 0}; }

  bool parametrized() const { return kind == TemplateKind::H || kind == TemplateKind::T16B; }

  friend bool operator==(const TemplateId&, const TemplateId&) = default;
};

/// "H(4)", "G1", "T16A", "T16B(3)".
std::string to_string(const TemplateId& id);
/// Inverse of to_string. Throws std::invalid_argument on an unknown id.
TemplateId parse_template_id(std::string_view text);

struct Template {
  TemplateId id;
  Graph graph;
  std::vector<std::pair<std::string, Vertex>> anchors;
  /// Template cycle in order (empty for H).
  std::vector<Vertex> cycle;

  /// Throws std::out_of_range for an unknown anchor name.
  Vertex anchor(std::string_view name) const;
};

/// Throws std::invalid_argument when a parametrized id has t < 1.
Template build_template(const TemplateId& id);

/// t-induced check: every pair of sub_vertices at g-distance <= t has the same
/// distance inside (sub_vertices, sub_edges). Throws std::invalid_argument if a
/// sub-edge is missing from g or has an endpoint outside sub_vertices.
bool is_t_induced(const Graph& g, std::span<const Vertex> sub_vertices, std::span<const Edge> sub_edges,
                  std::uint32_t t);

inline bool is_3_induced(const Graph& g, std::span<const Vertex> sub_vertices, std::span<const Edge> sub_edges) {
  return is_t_induced(g, sub_vertices, sub_edges, 3);
}

struct Embedding {
  TemplateId id;
  /// vertex_map[x] is the host vertex for template vertex x.
  std::vector<Vertex> vertex_map;
  bool edge_preserving = false;
  bool three_induced = false;
};

/// Builds the Embedding record for a candidate map, evaluating both flags.
Embedding make_embedding(const Graph& host, const Template& tmpl, std::vector<Vertex> vertex_map);

/// A 3-induced copy of H(t) with t % 3 != 0, if any. Pairs of inner nodes are
/// scanned in ascending order, so the result is deterministic.
/// Throws std::invalid_argument unless g is a tree or unicyclic.
std::optional<Embedding> find_h_embedding(const Graph& g);

/// A 3-induced copy of H(t) for this exact t.
std::optional<Embedding> find_h_embedding(const Graph& g, std::uint32_t t);

/// A 3-induced copy of G1/G2/G3 (host cycle length 4) or T16A/T16B(t) (host
/// cycle length 3), with the template cycle mapped onto the host cycle.
/// Throws std::invalid_argument on a shape or cycle-length mismatch.
std::optional<Embedding> find_fixed_template_embedding(const Graph& g, const TemplateId& id);

}  // namespace dist3
