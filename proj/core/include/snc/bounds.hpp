#pragma once

#include <cstddef>
#include <cstdint>

#include "snc/graph.hpp"
#include "snc/random_models.hpp"
#include "snc/vertex_set.hpp"

namespace snc {

/// Low out-degree set B = {v : deg+(v) < a} against
/// |B| <= (2/p)(a-1) + 1 + sqrt(12n(1-p)/p) + 4n/(|B|p), valid on graphs whose
/// subset edge counts are p-typical. For B empty the right side is undefined and
/// the result is reported as trivially holding (bound = +inf).
struct BadOutdegreeResult {
  VertexSet low;
  double bound = 0;
  bool holds = true;
};

/// Throws std::invalid_argument for a < 0 or p outside (0, 1].
BadOutdegreeResult bad_outdegree_bound(const Orientation& d, double p, long long a);

struct DegreeSetsResult {
  /// {v : |deg(v) - np| > eps np}
  VertexSet bad_degree;
  /// Ordered pairs (u, v), u != v, with deg(u,v) <= (1 - eps) n p^2.
  std::uint64_t bad_codegree_pairs = 0;
};

/// Throws std::invalid_argument unless 0 < eps < 1.
DegreeSetsResult lemma14_degree_sets(const Graph& g, double p, double eps);

struct LowOutdegreeResult {
  VertexSet low;  // {v : deg+(v) < d}
  double bound = 0;  // 2(d-1)/p + 2A sqrt(n/p) + 1
  bool holds = true;
};

LowOutdegreeResult lemma14_low_outdeg_bound(const Orientation& d, double p, double a_constant, long long threshold);

/// Two-term binomial tail bound: P[|B - Np| > sqrt(6Np(1-p)x) + 2x] < 2 exp(-3x).
struct ChernoffBound {
  double threshold = 0;
  double probability = 0;
};

/// Throws std::invalid_argument for x <= 0.
ChernoffBound chernoff_two_term(std::uint64_t trials_n, double p, double x);

/// Classic form: P[|X - EX| > t] < 2 exp(-t^2 / (2(sigma^2 + t/3))).
double chernoff_classic(std::uint64_t trials_n, double p, double t);

/// Fraction of `samples` draws B ~ Bin(N, p) with |B - Np| above the two-term threshold.
double monte_carlo_tail(std::uint64_t trials_n, double p, double x, std::uint64_t samples, Seed seed);

}  // namespace snc
