#include "snc/exhaustive.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

#include "snc/parallel.hpp"

namespace snc {

GrayOrientationWalker::GrayOrientationWalker(const Graph& g) : n_(g.order()), edges_(g.edges()) {
  if (n_ > kMaxOrder) throw std::invalid_argument("walker supports at most 64 vertices");
  if (edges_.size() > 64) throw std::invalid_argument("walker supports at most 64 edges");
  set_directions(0);
}

void GrayOrientationWalker::set_directions(std::uint64_t bits) {
  out_.fill(0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if ((bits >> i) & 1U)
      out_[v] |= std::uint64_t{1} << u;
    else
      out_[u] |= std::uint64_t{1} << v;
  }
  for (std::size_t u = 0; u < n_; ++u) outdeg_[u] = static_cast<std::uint32_t>(std::popcount(out_[u]));
  directions_ = edges_.size() == 64 ? bits : bits & ((std::uint64_t{1} << edges_.size()) - 1);
}

void GrayOrientationWalker::flip(std::size_t edge_index) noexcept {
  const auto [u, v] = edges_[edge_index];
  const std::uint64_t bu = std::uint64_t{1} << u;
  const std::uint64_t bv = std::uint64_t{1} << v;
  if (out_[u] & bv) {
    out_[u] &= ~bv;
    out_[v] |= bu;
    --outdeg_[u];
    ++outdeg_[v];
  } else {
    out_[v] &= ~bu;
    out_[u] |= bv;
    --outdeg_[v];
    ++outdeg_[u];
  }
  directions_ ^= std::uint64_t{1} << edge_index;
}

std::optional<Vertex> GrayOrientationWalker::first_seymour_vertex() const noexcept {
  for (std::size_t u = 0; u < n_; ++u) {
    const std::uint64_t first = out_[u];
    std::uint64_t reach = 0;
    for (std::uint64_t w = first; w; w &= w - 1) reach |= out_[std::countr_zero(w)];
    const std::uint64_t second = reach & ~first & ~(std::uint64_t{1} << u);
    if (std::popcount(second) >= std::popcount(first)) return static_cast<Vertex>(u);
  }
  return std::nullopt;
}

Orientation GrayOrientationWalker::to_orientation(std::shared_ptr<const Graph> base) const {
  OrientationBuilder b(std::move(base));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if ((directions_ >> i) & 1U) b.orient(v, u);
  }
  return b.build();
}

namespace {

/// Relabels non-isolated vertices to 0..k-1; used when n exceeds a word.
Graph compact(const Graph& g) {
  std::vector<Vertex> label(g.order(), 0);
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) label[v] = next++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(label[u], label[v]);
  return Graph(next, edges);
}

struct ShardResult {
  std::optional<std::uint64_t> counterexample_directions;
  std::uint64_t position = 0;  // index within the shard of the counterexample
};

}  // namespace

SearchOutcome brute_force_membership_in_S(const Graph& g, unsigned workers, unsigned shard_bits) {
  const std::size_t m = g.edge_count();
  if (m > kBruteForceEdgeBudget)
    throw std::invalid_argument("brute force limited to e(G) <= " + std::to_string(kBruteForceEdgeBudget) +
                                " (got " + std::to_string(m) + ")");

  bool has_isolated = false;
  for (Vertex v = 0; v < g.order() && !has_isolated; ++v) has_isolated = g.degree(v) == 0;
  const bool wide = g.order() > GrayOrientationWalker::kMaxOrder;
  // Any isolated vertex is a Seymour vertex; on wide graphs the compacted
  // walker drops those vertices, so the check is settled by their presence.
  const Graph walked = wide ? compact(g) : g;

  const std::size_t k = std::min<std::size_t>(shard_bits, m);
  const std::size_t low = m - k;
  const std::uint64_t shards = std::uint64_t{1} << k;
  const std::uint64_t per_shard = std::uint64_t{1} << low;

  std::vector<ShardResult> results(shards);
  std::atomic<std::uint64_t> first_bad{shards};

  parallel_for(shards, workers, [&](std::size_t s) {
    if (first_bad.load(std::memory_order_relaxed) < s) return;
    GrayOrientationWalker walker(walked);
    walker.set_directions(static_cast<std::uint64_t>(s) << low);
    for (std::uint64_t j = 0; j < per_shard; ++j) {
      if (j > 0) walker.flip(static_cast<std::size_t>(std::countr_zero(j)));
      if (wide && has_isolated) continue;
      if (!walker.has_seymour_vertex()) {
        results[s].counterexample_directions = walker.directions();
        results[s].position = j;
        std::uint64_t cur = first_bad.load();
        while (s < cur && !first_bad.compare_exchange_weak(cur, s)) {
        }
        return;
      }
      if ((j & 0xFFFF) == 0xFFFF && first_bad.load(std::memory_order_relaxed) < s) return;
    }
  });

  SearchOutcome out;
  out.orientations_checked = shards * per_shard;
  for (std::uint64_t s = 0; s < shards; ++s) {
    if (results[s].counterexample_directions) {
      out.all_have_seymour = false;
      out.orientations_checked = s * per_shard + results[s].position + 1;
      GrayOrientationWalker walker(walked);
      walker.set_directions(*results[s].counterexample_directions);
      // walked == g whenever a counterexample can exist (no compaction without isolated vertices)
      out.counterexample = walker.to_orientation(std::make_shared<const Graph>(g));
      break;
    }
  }
  return out;
}

SearchOutcome brute_force_shard(const Graph& g, unsigned shard_bits, std::uint64_t shard) {
  const std::size_t m = g.edge_count();
  if (m > kBruteForceEdgeBudget || g.order() > GrayOrientationWalker::kMaxOrder)
    throw std::invalid_argument("shard sweep limited to e(G) <= 30 and n <= 64");
  const std::size_t k = std::min<std::size_t>(shard_bits, m);
  if (shard >= (std::uint64_t{1} << k)) throw std::invalid_argument("shard index out of range");
  const std::size_t low = m - k;
  GrayOrientationWalker walker(g);
  walker.set_directions(shard << low);
  SearchOutcome out;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << low); ++j) {
    if (j > 0) walker.flip(static_cast<std::size_t>(std::countr_zero(j)));
    ++out.orientations_checked;
    if (!walker.has_seymour_vertex()) {
      out.all_have_seymour = false;
      out.counterexample = walker.to_orientation(std::make_shared<const Graph>(g));
      break;
    }
  }
  return out;
}

SearchOutcome sweep_tournaments(std::size_t n, unsigned workers) {
  if (n > kTournamentOrderCap)
    throw std::invalid_argument("tournament sweep limited to n <= " + std::to_string(kTournamentOrderCap));
  return brute_force_membership_in_S(Graph::complete(n), workers, n * (n - 1) / 2 >= 16 ? 8 : 4);
}

Graph labelled_graph(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) b.add_edge_unchecked(u, v);
  return std::move(b).build();
}

LabelledSweep sweep_labelled_graphs(std::size_t n, unsigned workers) {
  if (n > 6) throw std::invalid_argument("labelled sweep limited to n <= 6");
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t graphs = std::uint64_t{1} << pairs;
  std::vector<SearchOutcome> outcomes(graphs);
  parallel_for(graphs, workers, [&](std::size_t mask) {
    outcomes[mask] = brute_force_membership_in_S(labelled_graph(n, mask), 1, 0);
  });
  LabelledSweep out;
  out.graphs = graphs;
  for (const auto& o : outcomes) {
    out.orientations_checked += o.orientations_checked;
    if (o.all_have_seymour)
      ++out.graphs_in_class;
    else if (!out.counterexample)
      out.counterexample = o.counterexample;
  }
  return out;
}

}  // namespace snc
