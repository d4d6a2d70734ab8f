#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "snc/vertex_set.hpp"

namespace snc {

using Edge = std::pair<Vertex, Vertex>;

/// Square bit matrix: n rows of n-bit masks stored contiguously.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t row_words() const noexcept { return stride_; }

  std::span<const Word> row(Vertex u) const noexcept { return {data_.data() + u * stride_, stride_}; }
  std::span<Word> row(Vertex u) noexcept { return {data_.data() + u * stride_, stride_}; }

  bool test(Vertex u, Vertex v) const noexcept {
    return (data_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(Vertex u, Vertex v) noexcept { data_[u * stride_ + v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(Vertex u, Vertex v) noexcept {
    data_[u * stride_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

class GraphBuilder;

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  /// Vertex 0 joined to leaves 1..leaves.
  static Graph star(std::size_t leaves);
  static Graph complete_bipartite(std::size_t a, std::size_t b);
  /// Cycle on 1..k plus hub 0 adjacent to every cycle vertex.
  static Graph wheel(std::size_t rim);

  std::size_t order() const noexcept { return adj_.order(); }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_.test(u, v); }
  std::span<const Word> row(Vertex u) const noexcept { return adj_.row(u); }
  std::size_t row_words() const noexcept { return adj_.row_words(); }
  VertexSet neighbors(Vertex u) const { return VertexSet(order(), row(u)); }
  std::size_t degree(Vertex u) const noexcept { return popcount(row(u)); }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;

  BitMatrix adj_;
  std::size_t m_ = 0;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return adj_.order(); }
  bool has_edge(Vertex u, Vertex v) const noexcept { return adj_.test(u, v); }
  /// Throws on loops, out-of-range endpoints and duplicates.
  void add_edge(Vertex u, Vertex v);
  /// Unchecked insert for samplers that enumerate each pair once.
  void add_edge_unchecked(Vertex u, Vertex v) noexcept {
    adj_.set(u, v);
    adj_.set(v, u);
    ++m_;
  }
  Graph build() &&;

 private:
  BitMatrix adj_;
  std::size_t m_ = 0;
};

class OrientationBuilder;

/// Oriented graph: every edge of the base graph carries exactly one direction.
class Orientation {
 public:
  Orientation() = default;
  /// Orients every edge from its lower to its higher endpoint.
  explicit Orientation(std::shared_ptr<const Graph> base);
  /// Arcs (u, v) mean u -> v. The base graph is derived from the arcs.
  Orientation(std::size_t n, std::span<const Edge> arcs);

  /// Transitive tournament 0 -> 1 -> ... with i -> j for all i < j.
  static Orientation transitive_tournament(std::size_t n);
  /// i -> i+1 (mod n).
  static Orientation directed_cycle(std::size_t n);
  /// Tournament on odd n with i -> i+1, ..., i+(n-1)/2 (mod n).
  static Orientation rotational_tournament(std::size_t n);

  const Graph& base() const noexcept { return *base_; }
  const std::shared_ptr<const Graph>& base_ptr() const noexcept { return base_; }
  std::size_t order() const noexcept { return out_.order(); }

  bool has_arc(Vertex u, Vertex v) const noexcept { return out_.test(u, v); }
  std::span<const Word> out_row(Vertex u) const noexcept { return out_.row(u); }
  std::size_t row_words() const noexcept { return out_.row_words(); }
  VertexSet out_neighbors(Vertex u) const { return VertexSet(order(), out_row(u)); }
  std::size_t out_degree(Vertex u) const noexcept { return popcount(out_row(u)); }
  std::vector<std::size_t> out_degrees() const;
  std::size_t min_out_degree() const;

  /// Arcs in lexicographic order of the underlying edge.
  std::vector<Edge> arcs() const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.out_ == b.out_ && *a.base_ == *b.base_;
  }

 private:
  friend class OrientationBuilder;

  std::shared_ptr<const Graph> base_ = std::make_shared<const Graph>();
  BitMatrix out_;
};

/// Mutable orientation of a fixed base graph. Starts with every edge oriented low -> high.
class OrientationBuilder {
 public:
  explicit OrientationBuilder(std::shared_ptr<const Graph> base);
  explicit OrientationBuilder(const Orientation& from);

  const Graph& base() const noexcept { return *base_; }
  bool has_arc(Vertex u, Vertex v) const noexcept { return out_.test(u, v); }
  std::span<const Word> out_row(Vertex u) const noexcept { return out_.row(u); }
  std::size_t out_degree(Vertex u) const noexcept { return popcount(out_.row(u)); }

  /// Directs the edge {u, v} as u -> v. Throws if {u, v} is not an edge.
  void orient(Vertex u, Vertex v);
  /// Reverses the arc u -> v. Throws if it is not present.
  void reverse(Vertex u, Vertex v);

  Orientation build() const;

 private:
  std::shared_ptr<const Graph> base_;
  BitMatrix out_;
};

}  // namespace snc
