#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "snc/graph.hpp"
#include "snc/vertex_set.hpp"

namespace snc {

enum class FinderKind { typical, min_outdegree, bijumbled };

std::string_view to_string(FinderKind kind) noexcept;
/// Accepts "typical", "mindeg" / "min_outdegree", "bijumbled".
FinderKind parse_finder_kind(std::string_view text);

/// Intermediate state of a constructive finder. Sets and scalars are keyed by
/// their usual names (S, T, N, X, Y, bad1, bad2, U, ...). `regime` records
/// which preconditions of the underlying argument held on this input.
struct FinderTrace {
  FinderKind kind = FinderKind::min_outdegree;
  std::optional<Vertex> w;
  std::map<std::string, VertexSet> sets;
  std::map<std::string, double> scalars;
  std::map<std::string, bool> regime;
  /// No admissible w existed (T or U empty). verdict is then absent.
  bool regime_failure = false;
  /// is_seymour_vertex(D, w)
  std::optional<bool> verdict;
};

/// S = {v : deg+(v) < ceil((1-alpha)np/2)}, T = V \ S, w = argmax over T of
/// deg+_T (lowest index on ties). Throws std::invalid_argument unless
/// 0 < alpha < 1/4 and 0 < p < 1.
FinderTrace finder_typical(const Orientation& d, double p, double alpha);

/// w = a vertex of minimum out-degree (lowest index).
FinderTrace finder_min_outdegree(const Orientation& d);

/// B(u) = {v != u : deg(u,v) <= (1-eps)np^2}, bad1 = {u : |B(u)| >= ceil(sqrt(eps) n)},
/// bad2 = {v : deg+(v) < ceil(2 sqrt(eps) np)}, U = V \ (bad1 u bad2), w = argmin
/// over U of out-degree inside U. Throws std::invalid_argument unless 0 < eps < 1
/// and 0 < p < 1; the tighter eps < 1/225 is recorded, not enforced.
FinderTrace finder_bijumbled(const Orientation& d, double p, double eps);

/// Which vertices count as reached "in two steps".
enum class KingReach {
  exact_distance_two,  // N2(v)
  any_two_step_path,   // every z with a directed path v -> x -> z, z != v
};

/// |reach(v)| >= lambda n. Throws std::invalid_argument for v out of range or
/// lambda outside (0, 1].
bool lambda_king_check(const Orientation& d, Vertex v, double lambda,
                       KingReach reach = KingReach::exact_distance_two);

/// Every u has {u} u N1(u) u N2(u) = V.
bool length2_cover_check(const Orientation& d);

}  // namespace snc
