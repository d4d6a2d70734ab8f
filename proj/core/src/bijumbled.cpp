#include "snc/bijumbled.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "snc/neighborhoods.hpp"
#include "snc/parallel.hpp"
#include "subset_pool.hpp"

namespace snc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kBatch = 256;

struct Witness {
  std::vector<Vertex> u;
  std::vector<Vertex> w;
  std::size_t edges = 0;
  double deviation = 0;
  double bound = 0;
};

struct Accumulator {
  double margin = kInf;
  std::optional<Witness> witness;
  std::uint64_t checked = 0;

  void observe(std::size_t a, std::size_t b, std::size_t edges, double p, double alpha, const auto& make_sets) {
    ++checked;
    const double deviation = std::abs(static_cast<double>(edges) - p * static_cast<double>(a) * static_cast<double>(b));
    const double bound = alpha * std::sqrt(static_cast<double>(a) * static_cast<double>(b));
    margin = std::min(margin, bound - deviation);
    if (deviation > bound && !witness) {
      auto [us, ws] = make_sets();
      witness = Witness{std::move(us), std::move(ws), edges, deviation, bound};
    }
  }

  void merge_after(const Accumulator& later) {
    checked += later.checked;
    margin = std::min(margin, later.margin);
    if (!witness && later.witness) witness = later.witness;
  }
};

bool size_admissible(std::size_t n, double p, std::size_t a, std::size_t b) {
  return a >= 1 && a <= b && static_cast<double>(b) <= static_cast<double>(n) * p * static_cast<double>(a);
}

Accumulator exact_search(const Graph& g, double p, double alpha) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);

  Accumulator acc;
  std::vector<std::pair<int, Vertex>> outside;
  std::vector<long long> prefix;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t um = 1; um < total; ++um) {
    const auto u = static_cast<std::uint32_t>(um);
    const auto a = static_cast<std::size_t>(std::popcount(u));
    if (2 * a > n) continue;
    outside.clear();
    for (Vertex y = 0; y < n; ++y)
      if (!((u >> y) & 1U)) outside.emplace_back(std::popcount(rows[y] & u), y);
    std::sort(outside.begin(), outside.end(), [](const auto& l, const auto& r) {
      return l.first != r.first ? l.first > r.first : l.second < r.second;
    });
    const std::size_t rest = outside.size();
    prefix.assign(rest + 1, 0);
    for (std::size_t i = 0; i < rest; ++i) prefix[i + 1] = prefix[i] + outside[i].first;
    for (std::size_t b = a; b <= rest; ++b) {
      if (!size_admissible(n, p, a, b)) break;
      const double expected = p * static_cast<double>(a) * static_cast<double>(b);
      const auto hi = static_cast<std::size_t>(prefix[b]);
      const auto lo = static_cast<std::size_t>(prefix[rest] - prefix[rest - b]);
      const bool use_hi = static_cast<double>(hi) - expected >= expected - static_cast<double>(lo);
      acc.observe(a, b, use_hi ? hi : lo, p, alpha, [&] {
        std::vector<Vertex> us;
        for (Vertex v = 0; v < n; ++v)
          if ((u >> v) & 1U) us.push_back(v);
        std::vector<Vertex> ws;
        for (std::size_t i = 0; i < b; ++i) ws.push_back(outside[use_hi ? i : rest - 1 - i].second);
        std::sort(ws.begin(), ws.end());
        return std::pair{us, ws};
      });
    }
  }
  return acc;
}

Accumulator sampled_batch(const Graph& g, double p, double alpha, const detail::SubsetPool& pool, Seed seed,
                          std::size_t draws) {
  const std::size_t n = g.order();
  const std::size_t half = std::max<std::size_t>(1, n / 2);
  auto rng = seed.engine();
  Accumulator acc;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto strategy = static_cast<unsigned>(rng() % detail::SubsetPool::kStrategies);
    std::size_t a = 1;
    switch (rng() % 3) {
      case 0: a = detail::SubsetPool::between(rng, 1, std::min<std::size_t>(8, half)); break;
      case 1: a = half - detail::SubsetPool::between(rng, 0, std::min<std::size_t>(half - 1, 4)); break;
      default: a = detail::SubsetPool::between(rng, 1, half); break;
    }
    const auto cap = static_cast<std::size_t>(std::floor(static_cast<double>(n) * p * static_cast<double>(a)));
    const std::size_t b_hi = std::min(n - a, cap);
    if (b_hi < a) continue;
    const std::size_t b = (rng() & 1U) ? b_hi : detail::SubsetPool::between(rng, a, b_hi);

    auto sets = pool.pair(rng, strategy, a, b);
    if (sets.x.size() > sets.y.size()) std::swap(sets.x, sets.y);
    if (sets.x.empty()) continue;
    const auto w_cap =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * p * static_cast<double>(sets.x.size())));
    if (sets.y.size() > w_cap) sets.y.resize(w_cap);
    if (!size_admissible(n, p, sets.x.size(), sets.y.size())) continue;

    const VertexSet us(n, std::span<const Vertex>(sets.x));
    const VertexSet ws(n, std::span<const Vertex>(sets.y));
    std::size_t edges = 0;
    us.for_each([&](Vertex x) { edges += popcount_and(g.row(x), ws.words()); });
    acc.observe(sets.x.size(), sets.y.size(), edges, p, alpha, [&] {
      std::sort(sets.x.begin(), sets.x.end());
      std::sort(sets.y.begin(), sets.y.end());
      return std::pair{sets.x, sets.y};
    });
  }
  return acc;
}

}  // namespace

double default_jumbled_constant() noexcept {
  return std::numbers::e * std::numbers::e * std::sqrt(6.0);
}

BijumbledParams::BijumbledParams(double p, double alpha) : p_(p), alpha_(alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("bijumbledness requires alpha > 0");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("bijumbledness requires p in (0,1]");
}

BijumbledParams BijumbledParams::from_constant(std::size_t n, double p, double a_constant) {
  BijumbledParams params(p, a_constant * std::sqrt(static_cast<double>(n) * p));
  params.a_ = a_constant;
  return params;
}

BijumbledVerdict certify_weak_bijumbled(const Graph& g, const BijumbledParams& params, const CheckOptions& options) {
  const std::size_t n = g.order();
  if (options.mode == CheckMode::exact && n > kBijumbledExactCap)
    throw std::invalid_argument("exact bijumbledness check limited to n <= " + std::to_string(kBijumbledExactCap));

  Accumulator acc;
  if (options.mode == CheckMode::exact) {
    acc = exact_search(g, params.p(), params.alpha());
  } else {
    const detail::SubsetPool pool(g, options.orientation_hint);
    const std::size_t batches = (options.budget + kBatch - 1) / kBatch;
    std::vector<Accumulator> parts(batches);
    parallel_for(batches, options.workers, [&](std::size_t b) {
      const std::size_t draws = std::min(kBatch, options.budget - b * kBatch);
      parts[b] = sampled_batch(g, params.p(), params.alpha(), pool,
                               options.seed.derive(b, StreamTag::subsets), draws);
    });
    for (const auto& part : parts) acc.merge_after(part);
  }

  BijumbledVerdict v;
  v.mode = options.mode;
  v.margin = acc.margin;
  v.pairs_checked = acc.checked;
  if (acc.witness) {
    v.refuted = true;
    v.u = std::move(acc.witness->u);
    v.w = std::move(acc.witness->w);
    v.edges_between = acc.witness->edges;
    v.deviation = acc.witness->deviation;
    v.bound = acc.witness->bound;
  }
  return v;
}

bool witness_is_violation(const Graph& g, const BijumbledParams& params, const BijumbledVerdict& verdict) {
  if (!verdict.refuted) return false;
  const std::size_t n = g.order();
  for (Vertex v : verdict.u)
    if (v >= n) return false;
  for (Vertex v : verdict.w)
    if (v >= n) return false;
  const VertexSet u(n, std::span<const Vertex>(verdict.u));
  const VertexSet w(n, std::span<const Vertex>(verdict.w));
  if (u.size() != verdict.u.size() || w.size() != verdict.w.size()) return false;
  if (!u.disjoint_from(w) || !size_admissible(n, params.p(), u.size(), w.size())) return false;
  const auto a = static_cast<double>(u.size());
  const auto b = static_cast<double>(w.size());
  const auto e = static_cast<double>(edges_between(g, u, w));
  return std::abs(e - params.p() * a * b) > params.alpha() * std::sqrt(a * b);
}

JumbledSubsetCheck fact_jumbled_check(const Graph& g, const BijumbledParams& params, const VertexSet& u) {
  const auto k = static_cast<double>(u.size());
  const auto e = static_cast<double>(edges_within(g, u));
  JumbledSubsetCheck out;
  out.deviation = std::abs(e - params.p() * k * (k - 1) / 2.0);
  out.holds = out.deviation <= params.alpha() * k;
  return out;
}

}  // namespace snc
