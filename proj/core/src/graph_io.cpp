#include "snc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace snc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

namespace {

struct RawList {
  std::size_t n = 0;
  std::vector<Edge> pairs;
};

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

RawList read_pairs(std::istream& in, bool directed) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError(1, "missing header \"n m\"");

  RawList raw;
  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError(lineno, "header must be \"n m\"");
  }
  if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
  if (static_cast<std::size_t>(n) > kMaxVertices)
    throw ParseError(lineno, "order exceeds " + std::to_string(kMaxVertices));
  raw.n = static_cast<std::size_t>(n);

  std::vector<std::vector<Word>> seen(raw.n, std::vector<Word>(words_for(raw.n), 0));
  auto mark = [&](long long a, long long b) { seen[a][b / 64] |= Word{1} << (b % 64); };
  auto marked = [&](long long a, long long b) { return (seen[a][b / 64] >> (b % 64)) & 1U; };

  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, lineno))
      throw ParseError(lineno + 1, "expected " + std::to_string(m) + " pairs, got " + std::to_string(k));
    std::istringstream ls(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(lineno, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex index out of range");
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    if (!directed && u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
    if (marked(u, v)) throw ParseError(lineno, "duplicate pair");
    if (marked(v, u)) throw ParseError(lineno, directed ? "reverse duplicate arc" : "duplicate pair");
    mark(u, v);
    raw.pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, lineno)) throw ParseError(lineno, "trailing content after declared pairs");
  return raw;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  return f;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto raw = read_pairs(in, false);
  return Graph(raw.n, raw.pairs);
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto f = open_or_throw(path);
  try {
    return read_edge_list(f);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

Orientation read_arc_list(std::istream& in) {
  auto raw = read_pairs(in, true);
  return Orientation(raw.n, raw.pairs);
}

Orientation read_arc_list(const std::filesystem::path& path) {
  auto f = open_or_throw(path);
  try {
    return read_arc_list(f);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_arc_list(std::ostream& out, const Orientation& d) {
  out << d.order() << ' ' << d.base().edge_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

}  // namespace snc
