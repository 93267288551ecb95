#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "kcycles/caps.hpp"
#include "kcycles/multipoly.hpp"

namespace kcycles {

// Rooted tree on vertices 0..2k where every vertex i >= 1 has a parent
// smaller than i. parent(0) is kNoParent.
class IncreasingTree {
 public:
  static constexpr int kNoParent = -1;

  // Throws std::invalid_argument unless parents[0] == kNoParent,
  // 0 <= parents[i] < i for i >= 1, and the vertex count is odd.
  explicit IncreasingTree(std::vector<int> parents);

  std::size_t vertex_count() const { return parents_.size(); }
  int k() const { return static_cast<int>(parents_.size() / 2); }
  int parent(std::size_t vertex) const { return parents_[vertex]; }
  const std::vector<int>& parents() const { return parents_; }

  friend bool operator==(const IncreasingTree&, const IncreasingTree&) = default;

 private:
  std::vector<int> parents_;
};

// Exponent i counts the components of T - {i} with an even vertex count.
Exponents tree_monomial(const IncreasingTree& tree);

// All (2k)! increasing trees on 2k+1 vertices, each exactly once.
class IncreasingTrees {
 public:
  class iterator {
   public:
    using value_type = IncreasingTree;
    using difference_type = std::ptrdiff_t;
    using reference = const IncreasingTree&;
    using pointer = const IncreasingTree*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return tree_; }
    pointer operator->() const { return &tree_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class IncreasingTrees;
    explicit iterator(std::size_t vertex_count);

    IncreasingTree tree_{{IncreasingTree::kNoParent}};
    std::vector<int> parents_;
    bool done_ = true;
  };

  // Throws CapExceeded when k > caps.max_tree_k.
  explicit IncreasingTrees(int k, const EnumCaps& caps = EnumCaps::defaults());

  iterator begin() const { return iterator(2 * static_cast<std::size_t>(k_) + 1); }
  iterator end() const { return iterator(); }

 private:
  int k_;
};

inline IncreasingTrees enumerate_increasing_trees(int k, const EnumCaps& caps = EnumCaps::defaults()) {
  return IncreasingTrees(k, caps);
}

// Sum of x^T over all increasing trees on 2k+1 vertices.
MultiPoly reduced_tree_poly_bruteforce(int k, const EnumCaps& caps = EnumCaps::defaults());

}  // namespace kcycles
