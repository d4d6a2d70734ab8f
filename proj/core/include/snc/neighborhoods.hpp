#pragma once

#include <cstddef>
#include <optional>

#include "snc/graph.hpp"
#include "snc/vertex_set.hpp"

namespace snc {

/// N^1(u): out-neighbours of u.
VertexSet first_neighborhood(const Orientation& d, Vertex u);

/// N^2(u): vertices at directed distance exactly two from u.
VertexSet second_neighborhood(const Orientation& d, Vertex u);

/// Out-neighbours of out-neighbours, without removing N^1(u) or u.
VertexSet two_step_reach(const Orientation& d, Vertex u);

/// |N^2(u)| >= |N^1(u)|.
bool is_seymour_vertex(const Orientation& d, Vertex u);

/// Lowest-index Seymour vertex, if any.
std::optional<Vertex> find_seymour_vertex(const Orientation& d);

/// True iff some neighbourhood G[N(v)] contains a cycle, i.e. G has a wheel subgraph.
bool contains_wheel(const Graph& g);

/// Every out-neighbourhood induces a digraph with a sink (vacuous when empty).
bool is_locally_cornering(const Orientation& d);

/// |N(u) ∩ N(v)|. Throws std::invalid_argument when u == v.
std::size_t codegree(const Graph& g, Vertex u, Vertex v);

/// e(A): edges with both ends in A.
std::size_t edges_within(const Graph& g, const VertexSet& a);

/// e(A, B): edges with one end in A and the other in B (each edge counted once).
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Number of arcs x -> y with x in A and y in B.
std::size_t arcs_from_to(const Orientation& d, const VertexSet& a, const VertexSet& b);

struct EdgeCounts {
  std::size_t within_a = 0;   // e(A)
  std::size_t between = 0;    // e(A, B)
  std::size_t a_to_b = 0;     // arcs A -> B
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

EdgeCounts edge_counts(const Orientation& d, const VertexSet& a, const VertexSet& b);

}  // namespace snc
