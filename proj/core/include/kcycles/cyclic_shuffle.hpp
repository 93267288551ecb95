#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "kcycles/caps.hpp"
#include "kcycles/rational.hpp"

namespace kcycles {

struct Letter {
  int kind = 0;   // 0..2k
  int index = 1;  // 1..n_kind

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word built by starting from kind 0 in index order and inserting each
// later kind, in index order, as one contiguous block after some letter
// already present.
//
// Sign conventions: the orientation is the parity of the word as a
// permutation of the letters in canonical order (kind-major, index-minor).
// A selected sign is the parity of the kind order in which one chosen letter
// of each kind appears. With these conventions x0 * T~_k = T_k, T_1 =
// n0 (n0 + n1) n2 and T_k(1,..,1) = (2k)! all hold.
class CyclicShuffle {
 public:
  CyclicShuffle(std::vector<Letter> word, std::vector<int> kinds);

  const std::vector<Letter>& word() const { return word_; }
  const std::vector<int>& kinds() const { return kinds_; }

  friend bool operator==(const CyclicShuffle&, const CyclicShuffle&) = default;

 private:
  std::vector<Letter> word_;
  std::vector<int> kinds_;
};

// Enumerates Sh_k(n_0, .., n_2k); the count is n0 (n0+n1) ... (n0+..+n_{2k-1}).
class CyclicShuffles {
 public:
  class iterator {
   public:
    using value_type = CyclicShuffle;
    using difference_type = std::ptrdiff_t;
    using reference = const CyclicShuffle&;
    using pointer = const CyclicShuffle*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class CyclicShuffles;
    explicit iterator(const std::vector<int>* kinds);
    void rebuild();

    const std::vector<int>* kinds_ = nullptr;
    std::vector<int> choices_;  // choices_[i]: block i inserted after letter choices_[i]
    CyclicShuffle current_{{}, {}};
    bool done_ = true;
  };

  // kinds must be positive odd integers (an odd count of them); throws
  // CapExceeded if the total exceeds caps.max_letters.
  explicit CyclicShuffles(std::vector<int> kinds, const EnumCaps& caps = EnumCaps::defaults());

  iterator begin() const { return iterator(&kinds_); }
  iterator end() const { return iterator(); }

  // Closed-form count n0 (n0+n1) ... (n0+..+n_{2k-1}).
  Integer expected_count() const;

 private:
  std::vector<int> kinds_;
};

inline CyclicShuffles enumerate_cyclic_shuffles(std::vector<int> kinds,
                                                const EnumCaps& caps = EnumCaps::defaults()) {
  return CyclicShuffles(std::move(kinds), caps);
}

// Orientation times the sum of selected signs over all prod n_i selections.
Integer oriented_sign_sum(const CyclicShuffle& shuffle);

// T_k at the tuple: sum of oriented sign sums over every cyclic shuffle.
Integer tree_poly_bruteforce(const std::vector<int>& kinds, const EnumCaps& caps = EnumCaps::defaults());

}  // namespace kcycles
