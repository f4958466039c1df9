#include "dist3/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace dist3 {
namespace {

// Far beyond anything the classifier is meant for; stops a typo in the header
// from allocating gigabytes.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError("expected two integers per line", line_no);
    std::uint64_t a = number(tok[0], line_no);
    std::uint64_t b = number(tok[1], line_no);

    if (!have_header) {
      if (a > kMaxOrder) throw ParseError("vertex count too large", line_no);
      if (b > a * (a - (a > 0 ? 1 : 0)) / 2) throw ParseError("more edges than a simple graph allows", line_no);
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) throw ParseError("more edge lines than the header's m = " + std::to_string(m), line_no);
    if (a >= n || b >= n) throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")", line_no);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) throw ParseError("repeated edge " + std::to_string(e.u) + " " + std::to_string(e.v), line_no);
    edges.push_back(e);
  }

  if (!have_header) throw ParseError("missing header line \"n m\"", 0);
  if (edges.size() != m)
    throw ParseError("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), 0);
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

std::string to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json j = {{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
  return j.dump() + "\n";
}

}  // namespace dist3
