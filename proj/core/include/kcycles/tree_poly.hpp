#pragma once

#include <map>
#include <memory>
#include <vector>

#include "kcycles/multipoly.hpp"
#include "kcycles/series.hpp"

namespace kcycles {

// Positive odd entries (n_0, .., n_2k), odd length.
class OddTuple {
 public:
  explicit OddTuple(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  int k() const { return static_cast<int>(values_.size() / 2); }

 private:
  std::vector<int> values_;
};

// The polynomials P_k^c, c = 1, 3, .., 2k+1, in x_0..x_2k, with
//   L_k^n = 4^{-k} sum_c c^{2n} P_k^c.
// P_k^{-c} = P_k^c is implied; |c| > 2k+1 gives zero.
struct PFamily {
  int k = 0;
  std::map<int, MultiPoly> polys;

  // P_k^c for any odd c (negative or out of range allowed).
  MultiPoly at(int c) const;
};

// Built from P_0^{+-1} = 1 by the three-term recursion in
// z_j = x_0 + .. + x_j and y_i = x_{2k+i}. Levels are memoized per process
// behind a mutex; the returned family is immutable.
std::shared_ptr<const PFamily> p_family(int k);

// T~_k = L_k^0 in 2k+1 variables.
MultiPoly reduced_tree_poly(int k);
// T_k = x_0 T~_k.
MultiPoly tree_poly(int k);
MultiPoly l_poly(int k, int n);

// Q_k at the tuple: T_k / |Sh_k| = T~_k / (z_1 ... z_{2k-1}) for k >= 1, n_0 for k = 0.
Rational q_eval(const OddTuple& tuple);
// Same, with the tuple given as integer values (validated).
Rational q_eval(const std::vector<int>& tuple);

// g_k(t) = sum_n L_k^n t^{2n}/(2n)! truncated after t^order, in 2k+3
// variables so the k+1 recursion can be applied.
TruncatedSeries g_series(int k, std::size_t order, std::size_t num_vars);

// Checks g_{k+1} = g_k (z_2k z_{2k+2} sinh^2 + z_2k y_2)
//   + g_k' z_{2k+1} (y_1 + y_2) sinh cosh + g_k'' y_1 y_2 cosh^2
// coefficientwise through t^order. Rejects order < 2.
bool verify_g_recursion(int k, std::size_t order);

}  // namespace kcycles
