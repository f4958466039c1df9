#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dist3/graph.hpp"
#include "dist3/structure.hpp"

namespace dist3 {

/// Which characterization produced a verdict.
enum class CaseKind {
  Tree,              // T2.7: inner-node distances in a tree
  CycleCoprime,      // T2.8: cycle length >= 7, not divisible by 3
  CycleMultipleOf3,  // T2.9: cycle length >= 6, divisible by 3
  C5,                // T2.13
  C4,                // T2.15
  C3,                // T2.16
  OracleFallback,    // no structural characterization applies
};

struct CaseTag {
  CaseKind kind = CaseKind::OracleFallback;
  /// Sub-case: the T2.13 bullet ("3i", "3ii", "2i", "2ii", "1", "C5", "none")
  /// or the matched template for T2.15/T2.16 ("H(4)", "G2", "T16B(3)", "none").
  std::string detail;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// "T2.7", "T2.13:C5", "T2.15:G1", "ORACLE_FALLBACK", ...
std::string to_string(const CaseTag& tag);

struct SpanningD3Edges {
  std::vector<Edge> edges;
};

struct SeparatingPartition {
  Partition blocks;
};

using Certificate = std::variant<SpanningD3Edges, SeparatingPartition>;

/// A structural decision before its certificate is attached.
struct Decision {
  bool connected = false;
  CaseTag tag;
};

struct Verdict {
  bool connected = false;
  CaseTag tag;
  Certificate certificate;
};

/// Raised by classify() when the structural decision contradicts D3(g).
class ClassificationConflict : public std::logic_error {
 public:
  ClassificationConflict(const std::string& what, Decision decision) : std::logic_error(what), decision_(std::move(decision)) {}
  const Decision& decision() const { return decision_; }

 private:
  Decision decision_;
};

/// Structural decision only. Throws std::invalid_argument for a disconnected
/// or empty graph.
Decision decide(const Graph& g);

/// decide() plus a certificate computed from D3(g).
Verdict classify(const Graph& g);

/// Precondition: g is a tree with at least two vertices.
Decision classify_tree(const Graph& g);
/// Precondition: g is unicyclic.
Decision classify_unicyclic(const Graph& g);
Decision classify_c6plus_mult3(const Graph& g, std::span<const Vertex> cycle);
Decision classify_c5(const Graph& g, std::span<const Vertex> cycle);
Decision classify_c4(const Graph& g, std::span<const Vertex> cycle);
Decision classify_c3(const Graph& g, std::span<const Vertex> cycle);

/// Spanning tree of D3(g) when connected, its component partition otherwise.
/// Throws std::logic_error if `connected` contradicts D3(g).
Certificate make_certificate(const Graph& g, bool connected);

/// Independent check of a certificate against g's distance table.
bool verify_certificate(const Graph& g, const Certificate& certificate);

}  // namespace dist3
