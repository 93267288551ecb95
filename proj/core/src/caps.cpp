#include "kcycles/caps.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace kcycles {

namespace {

std::int64_t parse_cap_value(std::string_view key, std::string_view value) {
  std::int64_t parsed = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, parsed);
  if (ec != std::errc() || ptr != end || parsed < 0) {
    throw std::invalid_argument("bad value for cap '" + std::string(key) + "': '" +
                                std::string(value) + "'");
  }
  return parsed;
}

}  // namespace

void EnumCaps::apply(std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view() : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("cap entry must be key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::int64_t value = parse_cap_value(key, item.substr(eq + 1));
    if (key == "trees") {
      max_tree_k = static_cast<int>(value);
    } else if (key == "letters") {
      max_letters = static_cast<int>(value);
    } else if (key == "shuffle") {
      max_shuffle_letters = static_cast<int>(value);
    } else if (key == "counting") {
      max_counting_points = value;
    } else if (key == "perm") {
      max_permutation_size = static_cast<int>(value);
    } else {
      throw std::invalid_argument("unknown cap '" + std::string(key) + "'");
    }
  }
}

}  // namespace kcycles
