#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dist3/graph.hpp"

namespace dist3 {

enum class GeneratorKind { Tree, Unicyclic, AllGraphs, Fixtures };

/// "tree", "unicyclic", "all-graphs", "fixtures".
std::string to_string(GeneratorKind kind);
/// Throws std::invalid_argument on an unknown name.
GeneratorKind parse_generator(std::string_view name);

/// Without `count` the corpus is exhaustive over every order up to n; with it,
/// `count` random instances whose order is drawn from [smallest, n].
struct CorpusConfig {
  GeneratorKind generator = GeneratorKind::Tree;
  /// Largest order. Defaults: trees 8 (random 64), unicyclic 8 (random 60),
  /// all-graphs 7. Ignored for fixtures.
  std::optional<std::size_t> n;
  /// Random unicyclic only. When absent, instance i gets cycle length
  /// 3 + i mod (min(15, n) - 2).
  std::optional<std::size_t> cycle_len;
  std::optional<std::uint64_t> count;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument if the combination cannot be generated.
void validate(const CorpusConfig& config);

struct Counterexample {
  std::string instance_id;
  Graph original;
  Graph minimized;
};

struct CorpusSummary {
  std::uint64_t instances = 0;
  std::uint64_t disagreements = 0;
  std::map<std::string, std::uint64_t> cases;
  std::vector<Counterexample> counterexamples;
};

/// Cross-checks every instance. With `records` set, writes one JSON line per
/// instance (in instance order, whatever `jobs` is) followed by the summary
/// line. For fixtures an instance also disagrees when the oracle contradicts
/// the fixture's expected flag.
CorpusSummary run_corpus(const CorpusConfig& config, unsigned jobs, std::ostream* records = nullptr);

std::string summary_json(const CorpusConfig& config, const CorpusSummary& summary);

struct CorollaryRow {
  std::size_t n = 0;
  std::uint64_t labeled_graphs = 0;
  std::uint64_t connected_graphs = 0;
  /// Connected graphs on at least two vertices with D3 connected. K1 is left
  /// out: D3(K1) = K1 is connected for no structural reason.
  std::uint64_t witnesses = 0;
  /// Witnesses that are 2-regular (and connected, so cycles).
  std::uint64_t cycle_witnesses = 0;
};

/// Every labeled graph on 1..max_n (<= 7) vertices, checked with the oracle.
std::vector<CorollaryRow> verify_corollary(std::size_t max_n, unsigned jobs);

/// No witness below 7 vertices, and every witness on 7 is a cycle.
bool corollary_holds(const std::vector<CorollaryRow>& rows);

/// One JSON line per row and a final {"holds": ...} line.
std::string corollary_json(const std::vector<CorollaryRow>& rows);

}  // namespace dist3
