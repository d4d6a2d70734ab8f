#pragma once

// Structured random subsets for the sampled refuters. Known violators of the
// concentration properties concentrate on degree-extreme prefixes and
// neighbourhoods, so those are mixed in with uniform draws.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "snc/graph.hpp"

namespace snc::detail {

using Rng = std::mt19937_64;

struct SetPair {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
};

class SubsetPool {
 public:
  static constexpr unsigned kStrategies = 5;

  SubsetPool(const Graph& g, const Orientation* hint) : g_(g), hint_(hint), perm_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) perm_[v] = v;
    by_degree_ = perm_;
    std::stable_sort(by_degree_.begin(), by_degree_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  }

  std::size_t order() const noexcept { return g_.order(); }

  static std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) {
    if (hi <= lo) return lo;
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  /// A single subset; strategy picks the family, k the size where applicable.
  std::vector<Vertex> single(Rng& rng, unsigned strategy, std::size_t k) const {
    const std::size_t n = order();
    k = std::min(k, n);
    switch (strategy % kStrategies) {
      case 0:
        return sample_from(rng, perm_, k);
      case 1:
        return {by_degree_.end() - static_cast<std::ptrdiff_t>(k), by_degree_.end()};
      case 2:
        return {by_degree_.begin(), by_degree_.begin() + static_cast<std::ptrdiff_t>(k)};
      case 3:
        return neighbours(random_vertex(rng), false);
      default: {
        const Vertex v = random_vertex(rng);
        if (hint_ != nullptr) return out_neighbours(v);
        auto s = neighbours(v, false);
        s.push_back(v);
        return s;
      }
    }
  }

  /// Disjoint X, Y with |X| <= a and |Y| <= b (structured strategies may return fewer).
  SetPair pair(Rng& rng, unsigned strategy, std::size_t a, std::size_t b) const {
    const std::size_t n = order();
    a = std::min(a, n);
    b = std::min(b, n - a);
    SetPair out;
    switch (strategy % kStrategies) {
      case 0: {
        auto s = sample_from(rng, perm_, a + b);
        out.x.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(a));
        out.y.assign(s.begin() + static_cast<std::ptrdiff_t>(a), s.end());
        break;
      }
      case 1: {
        out.x.assign(by_degree_.end() - static_cast<std::ptrdiff_t>(a), by_degree_.end());
        out.y.assign(by_degree_.begin(), by_degree_.begin() + static_cast<std::ptrdiff_t>(b));
        break;
      }
      case 2: {
        const Vertex v = random_vertex(rng);
        auto in = neighbours(v, false);
        auto away = neighbours(v, true);
        out.x = sample_from(rng, in, a);
        out.y = sample_from(rng, away, b);
        break;
      }
      case 3: {
        const Vertex v = random_vertex(rng);
        auto pool = (hint_ != nullptr && (rng() & 1U)) ? out_neighbours(v) : neighbours(v, false);
        const std::size_t total = std::min(pool.size(), a + b);
        const std::size_t xa = std::min(a, (total + 1) / 2);
        auto s = sample_from(rng, pool, total);
        out.x.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(xa));
        out.y.assign(s.begin() + static_cast<std::ptrdiff_t>(xa), s.end());
        break;
      }
      default: {
        const Vertex v = random_vertex(rng);
        out.x = {v};
        auto pool = (rng() & 1U) ? neighbours(v, false) : neighbours(v, true);
        out.y = sample_from(rng, pool, b);
        break;
      }
    }
    // degree prefixes may overlap when a + b > n
    if (strategy % kStrategies == 1) {
      std::vector<char> in_x(n, 0);
      for (Vertex v : out.x) in_x[v] = 1;
      std::erase_if(out.y, [&](Vertex v) { return in_x[v] != 0; });
    }
    return out;
  }

 private:
  Vertex random_vertex(Rng& rng) const {
    return static_cast<Vertex>(between(rng, 0, order() - 1));
  }

  /// N(v), or V \ N[v] when `complement` is set.
  std::vector<Vertex> neighbours(Vertex v, bool complement) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < order(); ++u)
      if (u != v && g_.adjacent(v, u) != complement) out.push_back(u);
    return out;
  }

  std::vector<Vertex> out_neighbours(Vertex v) const {
    std::vector<Vertex> out;
    for_each_bit(hint_->out_row(v), [&](Vertex u) { out.push_back(u); });
    return out;
  }

  /// k distinct elements of `pool` (all of it when smaller), partial Fisher-Yates.
  static std::vector<Vertex> sample_from(Rng& rng, std::vector<Vertex> pool, std::size_t k) {
    k = std::min(k, pool.size());
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = between(rng, i, pool.size() - 1);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

  const Graph& g_;
  const Orientation* hint_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> by_degree_;
};

}  // namespace snc::detail
