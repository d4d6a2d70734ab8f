#include "snc/neighborhoods.hpp"

#include <bit>
#include <string>
#include <stdexcept>
#include <vector>

namespace snc {

namespace {

void check_vertex(std::size_t n, Vertex u) {
  if (u >= n) throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
}

/// Union-find over a fixed vertex range, reset lazily per use.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {}

  void reset(std::span<const Vertex> members) {
    for (Vertex v : members) parent_[v] = v;
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  /// False when a and b were already connected.
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

VertexSet first_neighborhood(const Orientation& d, Vertex u) {
  check_vertex(d.order(), u);
  return d.out_neighbors(u);
}

VertexSet two_step_reach(const Orientation& d, Vertex u) {
  check_vertex(d.order(), u);
  VertexSet reach(d.order());
  auto acc = reach.words();
  for_each_bit(d.out_row(u), [&](Vertex w) {
    auto r = d.out_row(w);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= r[i];
  });
  return reach;
}

VertexSet second_neighborhood(const Orientation& d, Vertex u) {
  VertexSet n2 = two_step_reach(d, u);
  auto w = n2.words();
  auto first = d.out_row(u);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~first[i];
  n2.erase(u);
  return n2;
}

bool is_seymour_vertex(const Orientation& d, Vertex u) {
  return second_neighborhood(d, u).size() >= d.out_degree(u);
}

std::optional<Vertex> find_seymour_vertex(const Orientation& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    if (is_seymour_vertex(d, u)) return u;
  return std::nullopt;
}

bool contains_wheel(const Graph& g) {
  const std::size_t n = g.order();
  DisjointSets dsu(n);
  std::vector<Vertex> nbrs;
  for (Vertex v = 0; v < n; ++v) {
    nbrs.clear();
    for_each_bit(g.row(v), [&](Vertex u) { nbrs.push_back(u); });
    if (nbrs.size() < 3) continue;
    dsu.reset(nbrs);
    const auto hub = g.row(v);
    for (Vertex a : nbrs) {
      auto ra = g.row(a);
      // edges a-b inside N(v) with b > a
      for (std::size_t i = a / kWordBits; i < ra.size(); ++i) {
        Word w = ra[i] & hub[i];
        if (i == a / kWordBits) w &= ~Word{0} << (a % kWordBits);
        while (w) {
          const auto b = static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
          if (b == a) continue;
          if (!dsu.unite(a, b)) return true;
        }
      }
    }
  }
  return false;
}

bool is_locally_cornering(const Orientation& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    const auto out = d.out_row(u);
    bool empty = true;
    bool has_sink = false;
    for (std::size_t i = 0; i < out.size() && !has_sink; ++i) {
      Word w = out[i];
      while (w && !has_sink) {
        const auto x = static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
        empty = false;
        has_sink = !intersects(d.out_row(x), out);
      }
    }
    if (!empty && !has_sink) return false;
  }
  return true;
}

std::size_t codegree(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g.order(), u);
  check_vertex(g.order(), v);
  if (u == v) throw std::invalid_argument("codegree requires distinct vertices");
  return popcount_and(g.row(u), g.row(v));
}

std::size_t edges_within(const Graph& g, const VertexSet& a) {
  std::size_t twice = 0;
  a.for_each([&](Vertex x) { twice += popcount_and(g.row(x), a.words()); });
  return twice / 2;
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t sum = 0;
  a.for_each([&](Vertex x) { sum += popcount_and(g.row(x), b.words()); });
  // edges with both ends in A ∩ B were counted from both sides
  return sum - edges_within(g, a & b);
}

std::size_t arcs_from_to(const Orientation& d, const VertexSet& a, const VertexSet& b) {
  std::size_t sum = 0;
  a.for_each([&](Vertex x) { sum += popcount_and(d.out_row(x), b.words()); });
  return sum;
}

EdgeCounts edge_counts(const Orientation& d, const VertexSet& a, const VertexSet& b) {
  return {edges_within(d.base(), a), edges_between(d.base(), a, b), arcs_from_to(d, a, b)};
}

}  // namespace snc
