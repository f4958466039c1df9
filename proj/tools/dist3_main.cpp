// dist3: k-distance graphs and D3 connectivity from the command line.
//
// Exit status: 0 ok, 1 usage error, 2 parse error, 3 disagreement found.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dist3/classifier.hpp"
#include "dist3/corpus.hpp"
#include "dist3/distance.hpp"
#include "dist3/generators.hpp"
#include "dist3/io.hpp"
#include "dist3/parallel.hpp"
#include "dist3/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kDisagree = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string gen;
  std::optional<std::size_t> n;
  std::optional<std::size_t> cycle_len;
  std::optional<std::uint64_t> count;
  std::uint64_t seed = 0;
  std::uint32_t k = 3;
  std::string format = "edgelist";
  unsigned jobs = 0;
};

// --input or a single generated instance, for the one-graph commands.
dist3::Graph load_graph(const Options& o) {
  if (!o.input.empty() && !o.gen.empty()) throw UsageError("give either --input or --gen, not both");
  if (!o.input.empty()) {
    if (o.input == "-") return dist3::read_edge_list(std::cin);
    return dist3::read_edge_list_file(o.input);
  }
  if (o.gen.empty()) throw UsageError("an input is required: --input PATH or --gen {tree|unicyclic}");
  if (!o.n) throw UsageError("--gen needs --n");
  try {
    if (o.gen == "tree") return dist3::random_tree(*o.n, o.seed);
    if (o.gen == "unicyclic") {
      if (!o.cycle_len) throw UsageError("--gen unicyclic needs --cycle-len");
      return dist3::random_unicyclic(*o.n, *o.cycle_len, o.seed);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("single-graph commands accept --gen tree or --gen unicyclic, not '" + o.gen + "'");
}

std::string render(const dist3::Graph& g, const std::string& format) {
  if (format == "dot") return dist3::to_dot(g);
  if (format == "json") return dist3::to_json(g);
  return dist3::to_edge_list(g);
}

int cmd_dk(const Options& o) {
  if (o.k < 1) throw UsageError("--k must be at least 1");
  std::cout << render(dist3::distance_graph(load_graph(o), o.k), o.format);
  return kOk;
}

int cmd_classify(const Options& o) {
  dist3::Graph g = load_graph(o);
  if (!dist3::is_connected(g)) throw UsageError("classify needs a connected graph");
  dist3::ClassifyReport report = dist3::classify_report(g);
  std::cout << report.json;
  if (!report.agree()) {
    std::cerr << "disagreement: structural verdict " << (report.decision.connected ? "connected" : "disconnected")
              << " (" << dist3::to_string(report.decision.tag) << "), D3 says "
              << (report.oracle_connected ? "connected" : "disconnected") << "\n";
    return kDisagree;
  }
  return kOk;
}

int cmd_corpus(const Options& o) {
  if (!o.input.empty()) throw UsageError("corpus reads from --gen, not --input");
  if (o.gen.empty()) throw UsageError("corpus needs --gen {tree|unicyclic|all-graphs|fixtures}");
  dist3::CorpusConfig config;
  try {
    config.generator = dist3::parse_generator(o.gen);
    config.n = o.n;
    config.cycle_len = o.cycle_len;
    config.count = o.count;
    config.seed = o.seed;
    dist3::validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  dist3::CorpusSummary summary = dist3::run_corpus(config, o.jobs, &std::cout);
  std::cout.flush();
  if (summary.disagreements == 0) return kOk;
  std::cerr << summary.disagreements << " disagreement(s); minimized counterexamples:\n";
  for (const auto& ce : summary.counterexamples) std::cerr << "# " << ce.instance_id << "\n" << dist3::to_edge_list(ce.minimized);
  return kDisagree;
}

int cmd_verify_corollary(const Options& o) {
  const std::size_t top = o.n.value_or(dist3::kMaxEnumeratedGraphOrder);
  std::vector<dist3::CorollaryRow> rows;
  try {
    rows = dist3::verify_corollary(top, o.jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << dist3::corollary_json(rows);
  return dist3::corollary_holds(rows) ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("DIST3_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
      std::cerr << "dist3: DIST3_JOBS must be a positive integer, got '" << env << "'\n";
      return kUsage;
    }
  }

  CLI::App app{"k-distance graphs and D3 connectivity of trees and unicyclic graphs"};
  app.require_subcommand(1);
  Options o;
  o.jobs = dist3::default_jobs();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "edge-list file ('-' for stdin)");
    sub->add_option("--gen", o.gen, "generator: tree|unicyclic|all-graphs|fixtures")
        ->check(CLI::IsMember({"tree", "unicyclic", "all-graphs", "fixtures"}));
    sub->add_option("--n", o.n, "order (largest order for corpora)");
    sub->add_option("--cycle-len", o.cycle_len, "cycle length for unicyclic generation");
    sub->add_option("--seed", o.seed, "seed for random generation");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads (default: DIST3_JOBS, else all cores)")
        ->check(CLI::PositiveNumber);
  };

  auto* dk = app.add_subcommand("dk", "emit the k-distance graph D_k(G)");
  add_input(dk);
  dk->add_option("--k", o.k, "distance (default 3)");
  dk->add_option("--format", o.format, "edgelist|dot|json")->check(CLI::IsMember({"edgelist", "dot", "json"}));

  auto* classify = app.add_subcommand("classify", "decide whether D3(G) is connected, as JSON");
  add_input(classify);

  auto* corpus = app.add_subcommand("corpus", "cross-check classifier and oracle over a corpus, as JSON lines");
  add_input(corpus);
  corpus->add_option("--count", o.count, "random instances (exhaustive when absent)");
  add_jobs(corpus);

  auto* corollary = app.add_subcommand("verify-corollary", "check that C7 is the smallest graph with connected D3");
  corollary->add_option("--n", o.n, "largest order, at most 7 (default 7)");
  add_jobs(corollary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (dk->parsed()) return cmd_dk(o);
    if (classify->parsed()) return cmd_classify(o);
    if (corpus->parsed()) return cmd_corpus(o);
    return cmd_verify_corollary(o);
  } catch (const UsageError& e) {
    std::cerr << "dist3: " << e.what() << "\n";
    return kUsage;
  } catch (const dist3::ParseError& e) {
    std::cerr << "dist3: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    // Unreadable input file and similar.
    std::cerr << "dist3: " << e.what() << "\n";
    return kUsage;
  }
}
