#include "snc/bounds.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace snc {

BadOutdegreeResult bad_outdegree_bound(const Orientation& d, double p, long long a) {
  if (a < 0) throw std::invalid_argument("out-degree threshold must be non-negative");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("density must lie in (0,1]");
  const std::size_t n = d.order();
  BadOutdegreeResult out{VertexSet(n), std::numeric_limits<double>::infinity(), true};
  for (Vertex v = 0; v < n; ++v)
    if (static_cast<long long>(d.out_degree(v)) < a) out.low.insert(v);
  const auto size = static_cast<double>(out.low.size());
  if (size == 0) return out;
  const auto nd = static_cast<double>(n);
  out.bound = (2.0 / p) * static_cast<double>(a - 1) + 1.0 + std::sqrt(12.0 * nd * (1.0 - p) / p) +
              4.0 * nd / (size * p);
  out.holds = size <= out.bound;
  return out;
}

DegreeSetsResult lemma14_degree_sets(const Graph& g, double p, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const std::size_t n = g.order();
  const double np = static_cast<double>(n) * p;
  const double codeg_cut = (1.0 - eps) * np * p;
  DegreeSetsResult out{VertexSet(n), 0};
  for (Vertex v = 0; v < n; ++v)
    if (std::abs(static_cast<double>(g.degree(v)) - np) > eps * np) out.bad_degree.insert(v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(popcount_and(g.row(u), g.row(v))) <= codeg_cut) out.bad_codegree_pairs += 2;
  return out;
}

LowOutdegreeResult lemma14_low_outdeg_bound(const Orientation& d, double p, double a_constant, long long threshold) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("density must lie in (0,1]");
  const std::size_t n = d.order();
  LowOutdegreeResult out{VertexSet(n), 0, true};
  for (Vertex v = 0; v < n; ++v)
    if (static_cast<long long>(d.out_degree(v)) < threshold) out.low.insert(v);
  out.bound = 2.0 * static_cast<double>(threshold - 1) / p +
              2.0 * a_constant * std::sqrt(static_cast<double>(n) / p) + 1.0;
  out.holds = static_cast<double>(out.low.size()) <= out.bound;
  return out;
}

ChernoffBound chernoff_two_term(std::uint64_t trials_n, double p, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  const double var = static_cast<double>(trials_n) * p * (1.0 - p);
  return {std::sqrt(6.0 * var * x) + 2.0 * x, 2.0 * std::exp(-3.0 * x)};
}

double chernoff_classic(std::uint64_t trials_n, double p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  const double var = static_cast<double>(trials_n) * p * (1.0 - p);
  return 2.0 * std::exp(-(t * t) / (2.0 * (var + t / 3.0)));
}

double monte_carlo_tail(std::uint64_t trials_n, double p, double x, std::uint64_t samples, Seed seed) {
  if (samples < 1) throw std::invalid_argument("at least one sample required");
  const double threshold = chernoff_two_term(trials_n, p, x).threshold;
  const double mean = static_cast<double>(trials_n) * p;
  auto rng = seed.engine();
  std::binomial_distribution<std::uint64_t> binom(trials_n, p);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    if (std::abs(static_cast<double>(binom(rng)) - mean) > threshold) ++hits;
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace snc
