#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "snc/check_mode.hpp"
#include "snc/graph.hpp"

namespace snc {

/// Upper bound e^2 sqrt(6) on the absolute constant A for which G(n,p) is
/// a.a.s. weakly (p, A sqrt(np))-bijumbled.
double default_jumbled_constant() noexcept;

/// Density p and jumbledness alpha. When built from A, alpha = A sqrt(n p).
class BijumbledParams {
 public:
  BijumbledParams(double p, double alpha);
  static BijumbledParams from_constant(std::size_t n, double p, double a_constant);

  double p() const noexcept { return p_; }
  double alpha() const noexcept { return alpha_; }
  /// A when derived from it, otherwise alpha / sqrt(n p) is unknown and 0 is stored.
  double constant() const noexcept { return a_; }

 private:
  double p_;
  double alpha_;
  double a_ = 0;
};

struct BijumbledVerdict {
  bool refuted = false;
  CheckMode mode = CheckMode::sampled;
  std::vector<Vertex> u;
  std::vector<Vertex> w;
  std::size_t edges_between = 0;  // e(U, W) of the witness
  double deviation = 0;           // |e(U,W) - p|U||W||
  double bound = 0;               // alpha sqrt(|U||W|)
  /// min over checked pairs of bound - deviation (+inf if none).
  double margin = 0;
  std::uint64_t pairs_checked = 0;
};

/// Searches disjoint U, W with 1 <= |U| <= |W| <= np|U| violating
/// |e(U,W) - p|U||W|| <= alpha sqrt(|U||W|).
///
/// Exact mode (n <= kBijumbledExactCap) enumerates every U and, for each admissible
/// |W|, the W maximising and minimising e(U,W); that covers every pair because the
/// bound depends only on the sizes. Sampled mode draws `budget` pairs biased towards
/// singletons, halves, degree-sorted prefixes and neighbourhoods.
BijumbledVerdict certify_weak_bijumbled(const Graph& g, const BijumbledParams& params, const CheckOptions& options);

/// Re-verifies a refutation witness directly on g.
bool witness_is_violation(const Graph& g, const BijumbledParams& params, const BijumbledVerdict& verdict);

struct JumbledSubsetCheck {
  double deviation = 0;  // |e(G[U]) - p C(|U|,2)|
  bool holds = true;     // deviation <= alpha |U|
};

/// Single-set consequence of weak bijumbledness.
JumbledSubsetCheck fact_jumbled_check(const Graph& g, const BijumbledParams& params, const VertexSet& u);

}  // namespace snc
