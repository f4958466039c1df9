#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dist3/graph.hpp"

namespace dist3 {

/// Malformed edge-list text. line() is 1-based, 0 when the input ended early.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line) : std::runtime_error(format(what, line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& what, std::size_t line) {
    return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
  }
  std::size_t line_;
};

/// Edge-list format: "n m", then m lines "u v" with 0-based ids. '#' starts a
/// comment; blank lines are skipped. Self-loops, out-of-range ids, repeated
/// edges and a wrong edge count are all ParseErrors.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: header, then edges in lexicographic order, one per line.
std::string to_edge_list(const Graph& g);
std::string to_dot(const Graph& g);
/// {"n": .., "m": .., "edges": [[u, v], ...]}
std::string to_json(const Graph& g);

}  // namespace dist3
