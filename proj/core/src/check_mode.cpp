#include "snc/check_mode.hpp"

#include <stdexcept>
#include <string>

namespace snc {

std::string_view to_string(CheckMode mode) noexcept {
  return mode == CheckMode::exact ? "exact" : "sampled";
}

CheckMode parse_check_mode(std::string_view text) {
  if (text == "exact") return CheckMode::exact;
  if (text == "sampled") return CheckMode::sampled;
  throw std::invalid_argument("unknown check mode '" + std::string(text) + "' (expected exact or sampled)");
}

}  // namespace snc
