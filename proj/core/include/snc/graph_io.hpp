#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "snc/graph.hpp"

namespace snc {

/// Raised for malformed edge-list or arc-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Edge-list text: first line "n m", then m lines "u v" with u < v (0-indexed).
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Arc-list text: same layout, "u v" is the arc u -> v. No reverse duplicates.
Orientation read_arc_list(std::istream& in);
Orientation read_arc_list(const std::filesystem::path& path);
void write_arc_list(std::ostream& out, const Orientation& d);

}  // namespace snc
