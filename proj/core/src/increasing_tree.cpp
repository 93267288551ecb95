#include "kcycles/increasing_tree.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "kcycles/errors.hpp"

namespace kcycles {

IncreasingTree::IncreasingTree(std::vector<int> parents) : parents_(std::move(parents)) {
  if (parents_.empty() || parents_.size() % 2 == 0) {
    throw std::invalid_argument("increasing tree needs an odd number of vertices");
  }
  if (parents_[0] != kNoParent) throw std::invalid_argument("vertex 0 must be the root");
  for (std::size_t i = 1; i < parents_.size(); ++i) {
    if (parents_[i] < 0 || parents_[i] >= static_cast<int>(i)) {
      throw std::invalid_argument("vertex " + std::to_string(i) + " has parent " +
                                  std::to_string(parents_[i]) + ", need a smaller label");
    }
  }
}

namespace {

Exponents monomial_from_parents(const std::vector<int>& parents, std::vector<int>& subtree,
                                std::vector<std::uint16_t>& even_children) {
  const std::size_t n = parents.size();
  subtree.assign(n, 1);
  even_children.assign(n, 0);
  // Children carry larger labels, so a reverse sweep sees every subtree
  // complete before it is folded into its parent.
  for (std::size_t i = n; i-- > 1;) {
    subtree[parents[i]] += subtree[i];
    if (subtree[i] % 2 == 0) ++even_children[parents[i]];
  }
  Exponents e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int above = static_cast<int>(n) - subtree[i];
    e[i] = static_cast<std::uint16_t>(even_children[i] + (i > 0 && above % 2 == 0 ? 1 : 0));
  }
  return e;
}

}  // namespace

Exponents tree_monomial(const IncreasingTree& tree) {
  std::vector<int> subtree;
  std::vector<std::uint16_t> even_children;
  return monomial_from_parents(tree.parents(), subtree, even_children);
}

IncreasingTrees::IncreasingTrees(int k, const EnumCaps& caps) : k_(k) {
  if (k < 0) throw std::invalid_argument("increasing trees: k must be >= 0");
  if (k > caps.max_tree_k) throw CapExceeded("trees", caps.max_tree_k, k);
}

IncreasingTrees::iterator::iterator(std::size_t vertex_count)
    : parents_(vertex_count, 0), done_(false) {
  parents_[0] = IncreasingTree::kNoParent;
  tree_ = IncreasingTree(parents_);
}

IncreasingTrees::iterator& IncreasingTrees::iterator::operator++() {
  // Odometer over parent choices: vertex i picks one of 0..i-1.
  for (std::size_t i = parents_.size(); i-- > 1;) {
    if (parents_[i] + 1 < static_cast<int>(i)) {
      ++parents_[i];
      tree_ = IncreasingTree(parents_);
      return *this;
    }
    parents_[i] = 0;
  }
  done_ = true;
  return *this;
}

MultiPoly reduced_tree_poly_bruteforce(int k, const EnumCaps& caps) {
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
  std::map<Exponents, long long> counts;
  std::vector<int> subtree;
  std::vector<std::uint16_t> even_children;
  for (const IncreasingTree& tree : IncreasingTrees(k, caps)) {
    ++counts[monomial_from_parents(tree.parents(), subtree, even_children)];
  }
  MultiPoly result(n);
  for (const auto& [e, c] : counts) result.add_term(e, Rational(static_cast<long>(c)));
  return result;
}

}  // namespace kcycles
