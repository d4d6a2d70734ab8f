#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "snc/check_mode.hpp"
#include "snc/graph.hpp"

namespace snc {

/// The four concentration properties of a p-typical graph.
enum class TypicalityItem {
  subset_edges = 1,  // (i)   |e(X) - C(|X|,2) p| <= |X| sqrt(3np(1-p)) + 2n
  pair_edges = 2,    // (ii)  |e(X,Y) - |X||Y| p| <= sqrt(6 n'' p(1-p) |X||Y|) + 2n''
  degree = 3,        // (iii) |deg(v) - np| <= sqrt(6np(1-p) ln n) + 2 ln n
  codegree = 4,      // (iv)  |deg(u,v) - (n-2)p^2| <= sqrt(6np^2(1-p^2) ln n) + 2 ln n
};

std::string_view to_string(TypicalityItem item) noexcept;

double subset_edges_bound(std::size_t n, double p, std::size_t x_size);
double pair_edges_bound(double n_double_prime, double p, std::size_t x_size, std::size_t y_size);
double degree_bound(std::size_t n, double p);
double codegree_bound(std::size_t n, double p);

/// Smallest admissible n'' for sets of the given sizes: n' ln n when n' = max(|X|,|Y|)
/// satisfies n' ln n <= n, otherwise n (the n' = n'' = n case).
double binding_n_double_prime(std::size_t n, std::size_t x_size, std::size_t y_size);

struct TypicalityWitness {
  std::vector<Vertex> x;  // X, {v} or {u, v}
  std::vector<Vertex> y;  // Y for item (ii), empty otherwise
  double observed = 0;
  double expected = 0;
  double bound = 0;
  double n_double_prime = 0;  // item (ii) only
};

struct ItemVerdict {
  TypicalityItem item = TypicalityItem::subset_edges;
  CheckMode mode = CheckMode::exact;
  bool refuted = false;
  std::optional<TypicalityWitness> witness;
  /// min over checked instances of (bound - |observed - expected|); +inf if none checked.
  double margin = 0;
  std::uint64_t instances_checked = 0;
};

struct TypicalityReport {
  std::size_t n = 0;
  double p = 0;
  CheckMode mode = CheckMode::sampled;
  std::size_t budget = 0;
  Seed seed{};
  std::array<ItemVerdict, 4> items;

  bool passes() const noexcept;
  const ItemVerdict& operator[](TypicalityItem item) const noexcept {
    return items[static_cast<std::size_t>(item) - 1];
  }
};

/// Items (iii) and (iv) are always checked exactly. Items (i) and (ii) are
/// exhaustive in exact mode (n <= kTypicalityExactCap, else std::invalid_argument)
/// and sampled otherwise. X and Y in item (ii) are taken disjoint.
TypicalityReport check_typicality(const Graph& g, double p, const CheckOptions& options);

/// Recomputes the witness inequality directly on g; true iff it is a genuine violation.
bool witness_is_violation(const Graph& g, double p, const ItemVerdict& verdict);

}  // namespace snc
