#pragma once

#include <cstddef>
#include <string_view>

#include "snc/graph.hpp"
#include "snc/random_models.hpp"

namespace snc {

/// exact: exhaustive over every quantified subset (small n only).
/// sampled: a refuter; "pass" means "not refuted under budget".
enum class CheckMode { exact, sampled };

std::string_view to_string(CheckMode mode) noexcept;
CheckMode parse_check_mode(std::string_view text);

struct CheckOptions {
  CheckMode mode = CheckMode::sampled;
  /// Number of subset draws per quantified item in sampled mode.
  std::size_t budget = 10000;
  Seed seed{};
  /// Draw batches are spread over this many threads; results do not depend on it.
  unsigned workers = 1;
  /// Optional orientation whose out-neighbourhoods join the sampled subset pool.
  const Orientation* orientation_hint = nullptr;
};

/// Subset-quantified exact checks enumerate all 2^n subsets up to this order.
inline constexpr std::size_t kTypicalityExactCap = 20;
/// Exact bijumbledness enumerates every U (with extremal W) up to this order.
inline constexpr std::size_t kBijumbledExactCap = 14;

}  // namespace snc
