#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace kcycles {

// Limits on exhaustive enumerations. Exceeding one raises CapExceeded.
struct EnumCaps {
  int max_tree_k = 5;             // increasing trees on 2k+1 vertices
  int max_letters = 11;           // cyclic shuffle letters
  int max_shuffle_letters = 12;   // n+m in the X0/X1/X2 sign-sum families
  std::int64_t max_counting_points = 10'000'000;  // n^s in the counting lemma
  int max_permutation_size = 10;  // even-cycle histogram

  static EnumCaps defaults() { return {}; }

  // Overrides from a spec string such as "trees=6,letters=13". Unknown keys
  // and malformed values raise std::invalid_argument.
  void apply(std::string_view spec);
};

}  // namespace kcycles
