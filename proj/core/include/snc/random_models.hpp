#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "snc/graph.hpp"

namespace snc {

/// Independent sub-streams drawn from one root seed.
enum class StreamTag : std::uint64_t {
  graph = 1,
  orientation = 2,
  certifier = 3,
  binomial_tail = 4,
  subsets = 5,
  shard = 6,
  trial = 7,
};

std::string_view to_string(StreamTag tag) noexcept;

/// 64-bit root seed. Children are derived deterministically from (root, index, tag).
class Seed {
 public:
  constexpr Seed() = default;
  constexpr explicit Seed(std::uint64_t root) noexcept : root_(root) {}

  constexpr std::uint64_t root() const noexcept { return root_; }

  Seed derive(std::uint64_t index, StreamTag tag) const noexcept;
  std::mt19937_64 engine() const;

  friend constexpr bool operator==(Seed, Seed) = default;

 private:
  std::uint64_t root_ = 0;
};

/// Accepts decimal ("12345") or hexadecimal ("0x3039"). Throws std::invalid_argument.
Seed parse_seed(std::string_view text);
std::string format_seed(Seed seed);

/// Order and edge probability of G(n, p). Construction validates 0 < p < 1 and n >= 1.
class GnpParams {
 public:
  GnpParams(std::size_t n, double p);
  std::size_t n() const noexcept { return n_; }
  double p() const noexcept { return p_; }

 private:
  std::size_t n_;
  double p_;
};

/// Binomial random graph. Pairs are visited in lexicographic order, one draw per pair.
Graph sample_gnp(const GnpParams& params, Seed seed);

/// Each edge independently directed either way with probability 1/2,
/// consuming one random bit per edge in lexicographic edge order.
Orientation sample_uniform_orientation(std::shared_ptr<const Graph> g, Seed seed);

/// Orientation with minimum out-degree at least d, or nullopt when none exists.
///
/// Starts from a uniform random orientation. While some vertex v has out-degree
/// below d, a breadth-first search over reversed arcs finds a vertex s with
/// out-degree above d that reaches v, and the directed path s ~> v is reversed.
/// That lowers deg+(s) by one, raises deg+(v) by one, and leaves every other
/// out-degree unchanged. When no such s exists the set of vertices reaching v
/// has total out-degree below d times its size under every orientation, so the
/// request is infeasible.
std::optional<Orientation> orient_with_min_outdegree(std::shared_ptr<const Graph> g, std::size_t d, Seed seed);

/// Reverses the directed path path[0] -> path[1] -> ... -> path.back().
/// Throws std::invalid_argument if a listed arc is missing, std::logic_error if
/// any out-degree other than the two endpoints' changed.
void reverse_path(OrientationBuilder& b, std::span<const Vertex> path);

/// Smallest integer count satisfying a real-valued lower threshold.
std::size_t ceil_count(double threshold);

}  // namespace snc
