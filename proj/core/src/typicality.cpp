#include "snc/typicality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "snc/neighborhoods.hpp"
#include "snc/parallel.hpp"
#include "subset_pool.hpp"

namespace snc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kBatch = 256;

using SmallMask = std::uint32_t;

std::vector<SmallMask> small_rows(const Graph& g) {
  std::vector<SmallMask> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = static_cast<SmallMask>(g.row(v)[0]);
  return rows;
}

std::vector<Vertex> mask_members(SmallMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// Running reduction of one item: worst margin plus the first violation seen.
struct ItemAccumulator {
  double margin = kInf;
  std::optional<TypicalityWitness> witness;
  std::uint64_t checked = 0;

  void observe(double deviation, double bound, const auto& make_witness) {
    ++checked;
    const double m = bound - deviation;
    if (m < margin) margin = m;
    if (deviation > bound && !witness) witness = make_witness();
  }

  void merge_after(const ItemAccumulator& later) {
    checked += later.checked;
    margin = std::min(margin, later.margin);
    if (!witness && later.witness) witness = later.witness;
  }

  ItemVerdict finish(TypicalityItem item, CheckMode mode) const {
    ItemVerdict v;
    v.item = item;
    v.mode = mode;
    v.refuted = witness.has_value();
    v.witness = witness;
    v.margin = margin;
    v.instances_checked = checked;
    return v;
  }
};

// ------------------------------------------------------------------ (i)

ItemAccumulator subset_edges_exact(const Graph& g, double p) {
  const std::size_t n = g.order();
  const auto rows = small_rows(g);
  ItemAccumulator acc;
  SmallMask x = 0;
  long long edges = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto v = static_cast<Vertex>(std::countr_zero(k));
    const SmallMask bit = SmallMask{1} << v;
    if (x & bit) {
      x &= ~bit;
      edges -= std::popcount(rows[v] & x);
    } else {
      edges += std::popcount(rows[v] & x);
      x |= bit;
    }
    const auto size = static_cast<std::size_t>(std::popcount(x));
    const double expected = p * static_cast<double>(size) * static_cast<double>(size - 1) / 2.0;
    const double bound = subset_edges_bound(n, p, size);
    const double observed = static_cast<double>(edges);
    acc.observe(std::abs(observed - expected), bound, [&] {
      return TypicalityWitness{mask_members(x), {}, observed, expected, bound, 0.0};
    });
  }
  return acc;
}

ItemAccumulator subset_edges_batch(const Graph& g, double p, const detail::SubsetPool& pool, Seed seed,
                                   std::size_t draws) {
  const std::size_t n = g.order();
  auto rng = seed.engine();
  ItemAccumulator acc;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto strategy = static_cast<unsigned>(rng() % detail::SubsetPool::kStrategies);
    const std::size_t k = detail::SubsetPool::between(rng, 1, n);
    auto members = pool.single(rng, strategy, k);
    if (members.empty()) continue;
    const VertexSet x(n, std::span<const Vertex>(members));
    const auto size = members.size();
    const double observed = static_cast<double>(edges_within(g, x));
    const double expected = p * static_cast<double>(size) * static_cast<double>(size - 1) / 2.0;
    const double bound = subset_edges_bound(n, p, size);
    acc.observe(std::abs(observed - expected), bound, [&] {
      std::sort(members.begin(), members.end());
      return TypicalityWitness{members, {}, observed, expected, bound, 0.0};
    });
  }
  return acc;
}

// ------------------------------------------------------------------ (ii)

ItemAccumulator pair_edges_exact(const Graph& g, double p) {
  const std::size_t n = g.order();
  const auto rows = small_rows(g);
  ItemAccumulator acc;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::pair<int, Vertex>> outside;
  outside.reserve(n);
  for (std::uint64_t xm = 1; xm < total; ++xm) {
    const auto x = static_cast<SmallMask>(xm);
    const auto a = static_cast<std::size_t>(std::popcount(x));
    outside.clear();
    for (Vertex y = 0; y < n; ++y)
      if (!((x >> y) & 1U)) outside.emplace_back(std::popcount(rows[y] & x), y);
    // Descending by contribution: prefixes of length b maximise e(X,Y) over |Y| = b,
    // suffixes minimise it.
    std::sort(outside.begin(), outside.end(), [](const auto& l, const auto& r) {
      return l.first != r.first ? l.first > r.first : l.second < r.second;
    });
    const std::size_t rest = outside.size();
    std::vector<long long> prefix(rest + 1, 0);
    for (std::size_t i = 0; i < rest; ++i) prefix[i + 1] = prefix[i] + outside[i].first;
    for (std::size_t b = 1; b <= rest; ++b) {
      const double expected = p * static_cast<double>(a) * static_cast<double>(b);
      const double nn = binding_n_double_prime(n, a, b);
      const double bound = pair_edges_bound(nn, p, a, b);
      const auto hi = static_cast<double>(prefix[b]);
      const auto lo = static_cast<double>(prefix[rest] - prefix[rest - b]);
      const bool use_hi = (hi - expected) >= (expected - lo);
      const double observed = use_hi ? hi : lo;
      acc.observe(std::abs(observed - expected), bound, [&] {
        std::vector<Vertex> ys;
        for (std::size_t i = 0; i < b; ++i) ys.push_back(outside[use_hi ? i : rest - 1 - i].second);
        std::sort(ys.begin(), ys.end());
        return TypicalityWitness{mask_members(x), ys, observed, expected, bound, nn};
      });
    }
  }
  return acc;
}

ItemAccumulator pair_edges_batch(const Graph& g, double p, const detail::SubsetPool& pool, Seed seed,
                                 std::size_t draws) {
  const std::size_t n = g.order();
  const double ln_n = std::log(static_cast<double>(n));
  const std::size_t small_cap =
      ln_n > 0 ? std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(n) / ln_n)) : n;
  const std::size_t large_cap = std::max<std::size_t>(1, n / 2);
  auto rng = seed.engine();
  ItemAccumulator acc;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto strategy = static_cast<unsigned>(rng() % detail::SubsetPool::kStrategies);
    // alternate between the n' ln n <= n'' regime and the n' = n'' = n regime
    const std::size_t cap = (i % 2 == 0) ? small_cap : large_cap;
    const std::size_t a = detail::SubsetPool::between(rng, 1, cap);
    const std::size_t b = detail::SubsetPool::between(rng, 1, cap);
    auto sets = pool.pair(rng, strategy, a, b);
    if (sets.x.empty() || sets.y.empty()) continue;
    const VertexSet xs(n, std::span<const Vertex>(sets.x));
    const VertexSet ys(n, std::span<const Vertex>(sets.y));
    const double observed = static_cast<double>(edges_between(g, xs, ys));
    const double expected = p * static_cast<double>(sets.x.size()) * static_cast<double>(sets.y.size());
    const double nn = binding_n_double_prime(n, sets.x.size(), sets.y.size());
    const double bound = pair_edges_bound(nn, p, sets.x.size(), sets.y.size());
    acc.observe(std::abs(observed - expected), bound, [&] {
      std::sort(sets.x.begin(), sets.x.end());
      std::sort(sets.y.begin(), sets.y.end());
      return TypicalityWitness{sets.x, sets.y, observed, expected, bound, nn};
    });
  }
  return acc;
}

template <class BatchFn>
ItemAccumulator run_batches(std::size_t budget, unsigned workers, Seed seed, TypicalityItem item,
                            BatchFn&& batch) {
  const std::size_t batches = (budget + kBatch - 1) / kBatch;
  std::vector<ItemAccumulator> parts(batches);
  parallel_for(batches, workers, [&](std::size_t b) {
    const std::size_t draws = std::min(kBatch, budget - b * kBatch);
    const auto index = (static_cast<std::uint64_t>(item) << 32) | b;
    parts[b] = batch(seed.derive(index, StreamTag::subsets), draws);
  });
  ItemAccumulator total;
  for (const auto& part : parts) total.merge_after(part);
  return total;
}

// ------------------------------------------------------------------ (iii), (iv)

ItemAccumulator degrees_exact(const Graph& g, double p) {
  const std::size_t n = g.order();
  const double expected = static_cast<double>(n) * p;
  const double bound = degree_bound(n, p);
  ItemAccumulator acc;
  for (Vertex v = 0; v < n; ++v) {
    const auto observed = static_cast<double>(g.degree(v));
    acc.observe(std::abs(observed - expected), bound,
                [&] { return TypicalityWitness{{v}, {}, observed, expected, bound, 0.0}; });
  }
  return acc;
}

ItemAccumulator codegrees_exact(const Graph& g, double p) {
  const std::size_t n = g.order();
  const double expected = static_cast<double>(n >= 2 ? n - 2 : 0) * p * p;
  const double bound = codegree_bound(n, p);
  ItemAccumulator acc;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto observed = static_cast<double>(popcount_and(g.row(u), g.row(v)));
      acc.observe(std::abs(observed - expected), bound,
                  [&] { return TypicalityWitness{{u, v}, {}, observed, expected, bound, 0.0}; });
    }
  }
  return acc;
}

}  // namespace

std::string_view to_string(TypicalityItem item) noexcept {
  switch (item) {
    case TypicalityItem::subset_edges: return "i";
    case TypicalityItem::pair_edges: return "ii";
    case TypicalityItem::degree: return "iii";
    case TypicalityItem::codegree: return "iv";
  }
  return "?";
}

double subset_edges_bound(std::size_t n, double p, std::size_t x_size) {
  const auto nd = static_cast<double>(n);
  return static_cast<double>(x_size) * std::sqrt(3.0 * nd * p * (1.0 - p)) + 2.0 * nd;
}

double pair_edges_bound(double n_double_prime, double p, std::size_t x_size, std::size_t y_size) {
  return std::sqrt(6.0 * n_double_prime * p * (1.0 - p) * static_cast<double>(x_size) *
                   static_cast<double>(y_size)) +
         2.0 * n_double_prime;
}

double degree_bound(std::size_t n, double p) {
  const auto nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  return std::sqrt(6.0 * nd * p * (1.0 - p) * ln_n) + 2.0 * ln_n;
}

double codegree_bound(std::size_t n, double p) {
  const auto nd = static_cast<double>(n);
  const double ln_n = std::log(nd);
  return std::sqrt(6.0 * nd * p * p * (1.0 - p * p) * ln_n) + 2.0 * ln_n;
}

double binding_n_double_prime(std::size_t n, std::size_t x_size, std::size_t y_size) {
  const auto nd = static_cast<double>(n);
  const auto n_prime = static_cast<double>(std::max(x_size, y_size));
  const double candidate = n_prime * std::log(nd);
  return candidate <= nd ? candidate : nd;
}

bool TypicalityReport::passes() const noexcept {
  return std::none_of(items.begin(), items.end(), [](const ItemVerdict& v) { return v.refuted; });
}

TypicalityReport check_typicality(const Graph& g, double p, const CheckOptions& options) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("typicality requires p in (0,1)");
  const std::size_t n = g.order();
  if (options.mode == CheckMode::exact && n > kTypicalityExactCap)
    throw std::invalid_argument("exact typicality check limited to n <= " + std::to_string(kTypicalityExactCap));

  TypicalityReport report;
  report.n = n;
  report.p = p;
  report.mode = options.mode;
  report.budget = options.mode == CheckMode::sampled ? options.budget : 0;
  report.seed = options.seed;

  if (options.mode == CheckMode::exact) {
    report.items[0] = subset_edges_exact(g, p).finish(TypicalityItem::subset_edges, CheckMode::exact);
    report.items[1] = pair_edges_exact(g, p).finish(TypicalityItem::pair_edges, CheckMode::exact);
  } else {
    const detail::SubsetPool pool(g, options.orientation_hint);
    report.items[0] =
        run_batches(options.budget, options.workers, options.seed, TypicalityItem::subset_edges,
                    [&](Seed s, std::size_t draws) { return subset_edges_batch(g, p, pool, s, draws); })
            .finish(TypicalityItem::subset_edges, CheckMode::sampled);
    report.items[1] =
        run_batches(options.budget, options.workers, options.seed, TypicalityItem::pair_edges,
                    [&](Seed s, std::size_t draws) { return pair_edges_batch(g, p, pool, s, draws); })
            .finish(TypicalityItem::pair_edges, CheckMode::sampled);
  }
  report.items[2] = degrees_exact(g, p).finish(TypicalityItem::degree, CheckMode::exact);
  report.items[3] = codegrees_exact(g, p).finish(TypicalityItem::codegree, CheckMode::exact);
  return report;
}

bool witness_is_violation(const Graph& g, double p, const ItemVerdict& verdict) {
  if (!verdict.witness) return false;
  const auto& w = *verdict.witness;
  const std::size_t n = g.order();
  for (Vertex v : w.x)
    if (v >= n) return false;
  for (Vertex v : w.y)
    if (v >= n) return false;

  double observed = 0;
  double expected = 0;
  double bound = 0;
  switch (verdict.item) {
    case TypicalityItem::subset_edges: {
      const VertexSet x(n, std::span<const Vertex>(w.x));
      if (x.size() != w.x.size()) return false;
      const auto k = static_cast<double>(w.x.size());
      observed = static_cast<double>(edges_within(g, x));
      expected = p * k * (k - 1) / 2.0;
      bound = subset_edges_bound(n, p, w.x.size());
      break;
    }
    case TypicalityItem::pair_edges: {
      const VertexSet x(n, std::span<const Vertex>(w.x));
      const VertexSet y(n, std::span<const Vertex>(w.y));
      if (x.size() != w.x.size() || y.size() != w.y.size() || !x.disjoint_from(y) || x.empty() || y.empty())
        return false;
      observed = static_cast<double>(edges_between(g, x, y));
      expected = p * static_cast<double>(w.x.size()) * static_cast<double>(w.y.size());
      bound = pair_edges_bound(binding_n_double_prime(n, w.x.size(), w.y.size()), p, w.x.size(), w.y.size());
      break;
    }
    case TypicalityItem::degree: {
      if (w.x.size() != 1) return false;
      observed = static_cast<double>(g.degree(w.x[0]));
      expected = static_cast<double>(n) * p;
      bound = degree_bound(n, p);
      break;
    }
    case TypicalityItem::codegree: {
      if (w.x.size() != 2 || w.x[0] == w.x[1]) return false;
      observed = static_cast<double>(codegree(g, w.x[0], w.x[1]));
      expected = static_cast<double>(n - 2) * p * p;
      bound = codegree_bound(n, p);
      break;
    }
  }
  return std::abs(observed - expected) > bound;
}

}  // namespace snc
