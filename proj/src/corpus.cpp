#include "dist3/corpus.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#include "dist3/generators.hpp"
#include "dist3/oracle.hpp"
#include "dist3/parallel.hpp"
#include "dist3/report.hpp"
#include "json.hpp"

namespace dist3 {
namespace {

constexpr std::size_t kMaxStratifiedCycle = 15;

std::size_t default_order(const CorpusConfig& c) {
  switch (c.generator) {
    case GeneratorKind::Tree:
      return c.count ? 64 : 8;
    case GeneratorKind::Unicyclic:
      return c.count ? 60 : 8;
    case GeneratorKind::AllGraphs:
      return kMaxEnumeratedGraphOrder;
    case GeneratorKind::Fixtures:
      return 0;
  }
  return 0;
}

std::size_t order_of(const CorpusConfig& c) { return c.n.value_or(default_order(c)); }

// A run of consecutive work units that share one order.
struct Segment {
  std::size_t n;
  std::uint64_t units;
};

std::vector<Segment> exhaustive_segments(const CorpusConfig& c) {
  std::vector<Segment> out;
  const std::size_t top = order_of(c);
  for (std::size_t k = 1; k <= top; ++k) {
    switch (c.generator) {
      case GeneratorKind::Tree:
        out.push_back({k, labeled_tree_count(k)});
        break;
      case GeneratorKind::Unicyclic:
        if (k >= 3) out.push_back({k, labeled_tree_count(k)});
        break;
      case GeneratorKind::AllGraphs:
        out.push_back({k, labeled_graph_count(k)});
        break;
      case GeneratorKind::Fixtures:
        break;
    }
  }
  return out;
}

std::uint64_t pair_mask(const Graph& g) {
  const std::uint64_t n = g.order();
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) {
    const std::uint64_t i = e.u, j = e.v;
    mask |= std::uint64_t{1} << (i * (2 * n - i - 1) / 2 + (j - i - 1));
  }
  return mask;
}

struct ChunkResult {
  std::string lines;
  CorpusSummary summary;
};

class ChunkRunner {
 public:
  explicit ChunkRunner(bool emit) : emit_(emit) {}

  void check(const Graph& g, std::string id, std::optional<bool> expected = std::nullopt) {
    AgreementRecord rec = cross_check(g, std::move(id));
    if (expected && rec.oracle_connected != *expected) rec.agree = false;
    ++out_.summary.instances;
    ++out_.summary.cases[to_string(rec.case_tag)];
    const Graph* shrunk = nullptr;
    if (!rec.agree) {
      ++out_.summary.disagreements;
      Graph minimized = classifier_disagrees(g) ? minimize_counterexample(g) : g;
      out_.summary.counterexamples.push_back({rec.instance_id, g, std::move(minimized)});
      shrunk = &out_.summary.counterexamples.back().minimized;
    }
    if (emit_) out_.lines += record_json(rec, expected, shrunk);
  }

  ChunkResult take() { return std::move(out_); }

 private:
  bool emit_;
  ChunkResult out_;
};

ChunkResult run_exhaustive(const CorpusConfig& c, const std::vector<Segment>& segments, std::uint64_t first,
                           std::uint64_t last, bool emit) {
  ChunkRunner runner(emit);
  std::uint64_t base = 0;
  for (const Segment& seg : segments) {
    const std::uint64_t lo = std::max(first, base), hi = std::min(last, base + seg.units);
    if (lo < hi) {
      const std::uint64_t a = lo - base, b = hi - base;
      const std::string prefix = std::to_string(seg.n);
      switch (c.generator) {
        case GeneratorKind::Tree: {
          std::uint64_t index = a;
          enumerate_labeled_trees(seg.n, a, b, [&](const Graph& g) {
            runner.check(g, "t" + prefix + "." + std::to_string(index++));
          });
          break;
        }
        case GeneratorKind::Unicyclic:
          for (std::uint64_t t = a; t < b; ++t) {
            std::uint64_t j = 0;
            enumerate_unicyclic(seg.n, t, t + 1, [&](const Graph& g) {
              runner.check(g, "u" + prefix + "." + std::to_string(t) + "." + std::to_string(j++));
            });
          }
          break;
        case GeneratorKind::AllGraphs:
          enumerate_labeled_graphs(seg.n, true, a, b, [&](const Graph& g) {
            runner.check(g, "g" + prefix + "." + std::to_string(pair_mask(g)));
          });
          break;
        case GeneratorKind::Fixtures:
          break;
      }
    }
    base += seg.units;
  }
  return runner.take();
}

Graph random_instance(const CorpusConfig& c, std::uint64_t index) {
  std::mt19937_64 rng(instance_seed(c.seed, index));
  const std::size_t top = order_of(c);
  if (c.generator == GeneratorKind::Tree) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, top)(rng);
    return random_tree(n, rng());
  }
  std::size_t len = 0;
  if (c.cycle_len) {
    len = *c.cycle_len;
  } else {
    const std::size_t strata = std::min(kMaxStratifiedCycle, top) - 2;
    len = 3 + static_cast<std::size_t>(index % strata);
  }
  const std::size_t n = std::uniform_int_distribution<std::size_t>(len, top)(rng);
  return random_unicyclic(n, len, rng());
}

ChunkResult run_random(const CorpusConfig& c, std::uint64_t first, std::uint64_t last, bool emit) {
  ChunkRunner runner(emit);
  for (std::uint64_t i = first; i < last; ++i) runner.check(random_instance(c, i), "r" + std::to_string(i));
  return runner.take();
}

}  // namespace

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Tree:
      return "tree";
    case GeneratorKind::Unicyclic:
      return "unicyclic";
    case GeneratorKind::AllGraphs:
      return "all-graphs";
    case GeneratorKind::Fixtures:
      return "fixtures";
  }
  return "?";
}

GeneratorKind parse_generator(std::string_view name) {
  for (auto kind : {GeneratorKind::Tree, GeneratorKind::Unicyclic, GeneratorKind::AllGraphs, GeneratorKind::Fixtures})
    if (name == to_string(kind)) return kind;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

void validate(const CorpusConfig& c) {
  const std::size_t n = order_of(c);
  const bool random = c.count.has_value();
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (c.cycle_len && (c.generator != GeneratorKind::Unicyclic || !random))
    fail("--cycle-len applies to random unicyclic corpora only");
  switch (c.generator) {
    case GeneratorKind::Tree:
      if (random && n < 2) fail("random trees need n >= 2");
      if (!random && (n < 1 || n > kMaxEnumeratedTreeOrder))
        fail("exhaustive trees need 1 <= n <= " + std::to_string(kMaxEnumeratedTreeOrder));
      break;
    case GeneratorKind::Unicyclic:
      if (n < 3) fail("unicyclic graphs need n >= 3");
      if (!random && n > kMaxEnumeratedTreeOrder)
        fail("exhaustive unicyclic graphs need n <= " + std::to_string(kMaxEnumeratedTreeOrder));
      if (c.cycle_len && (*c.cycle_len < 3 || *c.cycle_len > n)) fail("--cycle-len must lie in [3, n]");
      break;
    case GeneratorKind::AllGraphs:
      if (random) fail("all-graphs is exhaustive only");
      if (n < 1 || n > kMaxEnumeratedGraphOrder)
        fail("all-graphs needs 1 <= n <= " + std::to_string(kMaxEnumeratedGraphOrder));
      break;
    case GeneratorKind::Fixtures:
      if (random) fail("fixtures take no --count");
      break;
  }
}

CorpusSummary run_corpus(const CorpusConfig& c, unsigned jobs, std::ostream* records) {
  validate(c);
  const bool emit = records != nullptr;
  CorpusSummary total;
  auto consume = [&](ChunkResult&& r) {
    if (emit) *records << r.lines;
    total.instances += r.summary.instances;
    total.disagreements += r.summary.disagreements;
    for (const auto& [tag, k] : r.summary.cases) total.cases[tag] += k;
    for (auto& ce : r.summary.counterexamples) total.counterexamples.push_back(std::move(ce));
  };

  if (c.generator == GeneratorKind::Fixtures) {
    ChunkRunner runner(emit);
    for (const Fixture& f : fixtures()) runner.check(f.graph, f.id, f.expected_d3_connected);
    consume(runner.take());
  } else if (c.count) {
    ordered_chunks(*c.count, 1024, jobs, [&](std::uint64_t a, std::uint64_t b) { return run_random(c, a, b, emit); },
                   consume);
  } else {
    const auto segments = exhaustive_segments(c);
    std::uint64_t units = 0;
    for (const Segment& s : segments) units += s.units;
    // A unicyclic unit is a whole tree (up to ~30 graphs at n = 8).
    const std::uint64_t chunk = c.generator == GeneratorKind::Unicyclic ? 256 : 4096;
    ordered_chunks(
        units, chunk, jobs, [&](std::uint64_t a, std::uint64_t b) { return run_exhaustive(c, segments, a, b, emit); },
        consume);
  }
  if (emit) *records << summary_json(c, total);
  return total;
}

std::string summary_json(const CorpusConfig& c, const CorpusSummary& s) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "summary";
  j["generator"] = to_string(c.generator);
  j["mode"] = c.count ? "random" : "exhaustive";
  if (c.generator != GeneratorKind::Fixtures) j["n"] = order_of(c);
  if (c.count) j["seed"] = c.seed;
  j["instances"] = s.instances;
  j["disagreements"] = s.disagreements;
  j["cases"] = s.cases;
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& ce : s.counterexamples) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : ce.minimized.edges()) edges.push_back({e.u, e.v});
    ces.push_back({{"id", ce.instance_id}, {"n", ce.minimized.order()}, {"edges", std::move(edges)}});
  }
  j["counterexamples"] = std::move(ces);
  return j.dump() + "\n";
}

std::vector<CorollaryRow> verify_corollary(std::size_t max_n, unsigned jobs) {
  if (max_n < 1 || max_n > kMaxEnumeratedGraphOrder)
    throw std::invalid_argument("corollary check needs 1 <= n <= " + std::to_string(kMaxEnumeratedGraphOrder));
  std::vector<CorollaryRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CorollaryRow row;
    row.n = n;
    row.labeled_graphs = labeled_graph_count(n);
    ordered_chunks(
        row.labeled_graphs, 8192, jobs,
        [n](std::uint64_t a, std::uint64_t b) {
          CorollaryRow part;
          enumerate_labeled_graphs(n, true, a, b, [&](const Graph& g) {
            ++part.connected_graphs;
            if (n < 2 || !oracle_d3_connected(g).connected) return;
            ++part.witnesses;
            bool two_regular = true;
            for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) two_regular = two_regular && g.degree(v) == 2;
            if (two_regular) ++part.cycle_witnesses;
          });
          return part;
        },
        [&](CorollaryRow&& part) {
          row.connected_graphs += part.connected_graphs;
          row.witnesses += part.witnesses;
          row.cycle_witnesses += part.cycle_witnesses;
        });
    rows.push_back(row);
  }
  return rows;
}

bool corollary_holds(const std::vector<CorollaryRow>& rows) {
  for (const CorollaryRow& r : rows) {
    if (r.n <= 6 && r.witnesses != 0) return false;
    if (r.n == 7 && (r.witnesses == 0 || r.witnesses != r.cycle_witnesses)) return false;
  }
  return true;
}

std::string corollary_json(const std::vector<CorollaryRow>& rows) {
  std::string out;
  for (const CorollaryRow& r : rows) {
    nlohmann::json j = {{"schema_version", kSchemaVersion},
                        {"type", "row"},
                        {"n", r.n},
                        {"labeled_graphs", r.labeled_graphs},
                        {"connected_graphs", r.connected_graphs},
                        {"witnesses", r.witnesses},
                        {"cycle_witnesses", r.cycle_witnesses}};
    if (r.n == 1) j["note"] = "K1 excluded: D3(K1) = K1 is trivially connected";
    out += j.dump() + "\n";
  }
  nlohmann::json verdict = {{"schema_version", kSchemaVersion}, {"type", "verdict"}, {"holds", corollary_holds(rows)}};
  return out + verdict.dump() + "\n";
}

}  // namespace dist3
