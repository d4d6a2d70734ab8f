#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "snc/graph.hpp"

namespace snc {

/// Orientations of a graph on at most 64 vertices as single-word out-masks.
/// Edge i (lexicographic order) is oriented low -> high when bit i of the
/// direction word is 0. flip() keeps out-degrees updated incrementally.
class GrayOrientationWalker {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  explicit GrayOrientationWalker(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::uint64_t out_mask(Vertex u) const noexcept { return out_[u]; }
  std::size_t out_degree(Vertex u) const noexcept { return outdeg_[u]; }
  std::uint64_t directions() const noexcept { return directions_; }

  /// Reorients every edge according to the bit pattern.
  void set_directions(std::uint64_t bits);
  /// Reverses edge i.
  void flip(std::size_t edge_index) noexcept;

  std::optional<Vertex> first_seymour_vertex() const noexcept;
  bool has_seymour_vertex() const noexcept { return first_seymour_vertex().has_value(); }

  Orientation to_orientation(std::shared_ptr<const Graph> base) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::array<std::uint64_t, kMaxOrder> out_{};
  std::array<std::uint32_t, kMaxOrder> outdeg_{};
  std::uint64_t directions_ = 0;
};

/// Result of deciding, by exhaustion, whether every orientation has a Seymour vertex.
struct SearchOutcome {
  bool all_have_seymour = true;
  std::optional<Orientation> counterexample;
  /// Orientations examined in serial Gray order, up to and including a counterexample.
  std::uint64_t orientations_checked = 0;
};

inline constexpr std::size_t kBruteForceEdgeBudget = 30;
inline constexpr std::size_t kTournamentOrderCap = 8;

/// Walks all 2^e(G) orientations in Gray-code order, sharded over the highest
/// `shard_bits` edges. Throws std::invalid_argument when e(G) > kBruteForceEdgeBudget.
SearchOutcome brute_force_membership_in_S(const Graph& g, unsigned workers = 1, unsigned shard_bits = 6);

/// One shard of the sweep above: the highest `shard_bits` edge directions fixed
/// to the bits of `shard`, the rest walked in Gray order. Used by batch runs.
SearchOutcome brute_force_shard(const Graph& g, unsigned shard_bits, std::uint64_t shard);

/// All 2^C(n,2) tournaments on n vertices. Throws for n > kTournamentOrderCap.
SearchOutcome sweep_tournaments(std::size_t n, unsigned workers = 1);

/// Every labelled graph on n vertices (n <= 6), each swept exhaustively.
struct LabelledSweep {
  std::uint64_t graphs = 0;
  std::uint64_t graphs_in_class = 0;
  std::uint64_t orientations_checked = 0;
  std::optional<Orientation> counterexample;
};
LabelledSweep sweep_labelled_graphs(std::size_t n, unsigned workers = 1);

/// Graph on n vertices whose edge set is given by bits of `mask` over the
/// lexicographic pair order (0,1), (0,2), ..., (n-2,n-1).
Graph labelled_graph(std::size_t n, std::uint64_t mask);

}  // namespace snc
