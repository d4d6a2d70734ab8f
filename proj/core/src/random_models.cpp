#include "snc/random_models.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace snc {

namespace {

constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view to_string(StreamTag tag) noexcept {
  switch (tag) {
    case StreamTag::graph: return "graph";
    case StreamTag::orientation: return "orientation";
    case StreamTag::certifier: return "certifier";
    case StreamTag::binomial_tail: return "binomial_tail";
    case StreamTag::subsets: return "subsets";
    case StreamTag::shard: return "shard";
    case StreamTag::trial: return "trial";
  }
  return "unknown";
}

Seed Seed::derive(std::uint64_t index, StreamTag tag) const noexcept {
  std::uint64_t h = mix64(root_ ^ mix64(index));
  h = mix64(h ^ (static_cast<std::uint64_t>(tag) * 0xD1B54A32D192ED03ULL));
  return Seed(h);
}

std::mt19937_64 Seed::engine() const {
  return std::mt19937_64(mix64(root_));
}

Seed parse_seed(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value, base);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw std::invalid_argument("invalid seed \"" + std::string(text) + "\" (decimal or 0x-hex expected)");
  return Seed(value);
}

std::string format_seed(Seed seed) {
  char buf[19] = {'0', 'x'};
  auto [ptr, ec] = std::to_chars(buf + 2, buf + sizeof buf, seed.root(), 16);
  (void)ec;
  return std::string(buf, ptr);
}

GnpParams::GnpParams(std::size_t n, double p) : n_(n), p_(p) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("G(n,p) order must be in [1, kMaxVertices]");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("G(n,p) edge probability must lie in (0,1)");
}

Graph sample_gnp(const GnpParams& params, Seed seed) {
  auto rng = seed.engine();
  std::bernoulli_distribution coin(params.p());
  const auto n = static_cast<Vertex>(params.n());
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge_unchecked(u, v);
  return std::move(b).build();
}

Orientation sample_uniform_orientation(std::shared_ptr<const Graph> g, Seed seed) {
  auto rng = seed.engine();
  OrientationBuilder b(g);
  std::uint64_t bits = 0;
  int left = 0;
  for (const auto& [u, v] : g->edges()) {
    if (left == 0) {
      bits = rng();
      left = 64;
    }
    if (bits & 1U) b.orient(v, u);
    bits >>= 1;
    --left;
  }
  return b.build();
}

void reverse_path(OrientationBuilder& b, std::span<const Vertex> path) {
  if (path.size() < 2) return;
  std::vector<std::size_t> before;
  before.reserve(path.size());
  for (Vertex x : path) before.push_back(b.out_degree(x));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) b.reverse(path[i], path[i + 1]);
  for (std::size_t i = 0; i < path.size(); ++i) {
    std::size_t expected = before[i];
    if (i == 0) --expected;
    if (i + 1 == path.size()) ++expected;
    if (b.out_degree(path[i]) != expected)
      throw std::logic_error("path reversal changed an interior out-degree");
  }
}

std::optional<Orientation> orient_with_min_outdegree(std::shared_ptr<const Graph> g, std::size_t d, Seed seed) {
  const auto n = g->order();
  OrientationBuilder b(sample_uniform_orientation(g, seed));

  std::vector<std::size_t> outdeg(n);
  for (Vertex u = 0; u < n; ++u) outdeg[u] = b.out_degree(u);

  std::vector<Vertex> parent(n);
  std::vector<char> seen(n);
  std::deque<Vertex> queue;
  std::vector<Vertex> path;
  const std::size_t words = g->row_words();

  for (Vertex v = 0; v < n; ++v) {
    while (outdeg[v] < d) {
      // BFS backwards along arcs: x is discovered from y when x -> y.
      std::fill(seen.begin(), seen.end(), 0);
      queue.assign(1, v);
      seen[v] = 1;
      std::optional<Vertex> source;
      while (!queue.empty() && !source) {
        const Vertex y = queue.front();
        queue.pop_front();
        // in-neighbours of y: neighbours x with x -> y, i.e. not y -> x
        const auto nb = g->row(y);
        const auto out = b.out_row(y);
        for (std::size_t i = 0; i < words && !source; ++i) {
          Word w = nb[i] & ~out[i];
          while (w) {
            const auto x = static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
            if (seen[x]) continue;
            seen[x] = 1;
            parent[x] = y;
            if (outdeg[x] > d) {
              source = x;
              break;
            }
            queue.push_back(x);
          }
        }
      }
      if (!source) return std::nullopt;

      path.clear();
      for (Vertex x = *source; x != v; x = parent[x]) path.push_back(x);
      path.push_back(v);
      reverse_path(b, path);
      --outdeg[*source];
      ++outdeg[v];
    }
  }
  return b.build();
}

std::size_t ceil_count(double threshold) {
  if (!(threshold > 0.0)) return 0;
  const double c = std::ceil(threshold);
  if (c >= static_cast<double>(std::numeric_limits<std::size_t>::max()))
    throw std::overflow_error("threshold too large for a count");
  return static_cast<std::size_t>(c);
}

}  // namespace snc
