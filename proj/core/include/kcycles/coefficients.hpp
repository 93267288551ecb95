#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "kcycles/partition.hpp"
#include "kcycles/rational.hpp"

namespace kcycles {

// a_n = (-2)^{n+1} (2n+1)!!, b_n = 1 / a_n.
Rational a_single(int n);
Rational b_single(int n);

// Square matrix indexed by the partitions_of(weight) order.
struct CoeffMatrix {
  int weight = 0;
  std::vector<Partition> order;
  std::vector<std::vector<Rational>> entries;

  std::size_t index_of(const Partition& p) const;
  const Rational& at(const Partition& row, const Partition& col) const;

  friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b);
  bool is_identity() const;
};

// Sum of products rule: sum over surjections f from the parts of `lambda`
// onto the parts of `mu` with block sums equal to the mu parts, of the
// product of `one_part(block, mu_j)`. Blocks are passed as subsequences of
// `lambda` (original order kept).
Rational sum_over_surjections(const std::vector<int>& lambda, const std::vector<int>& mu,
                              const std::function<Rational(const std::vector<int>&)>& one_part);

// Memoized b_lambda^mu / a_lambda^mu tables.
//
// b_lambda^n comes from peeling one part k off lambda and summing over
// compositions of the rest (the recursion in Q_k); every other b_lambda^mu
// follows from the sum of products rule, and the a's by inverting the b
// matrix weight by weight. Methods lock an internal mutex, so a table may be
// shared between threads.
class CoeffTable {
 public:
  CoeffTable() = default;
  CoeffTable(const CoeffTable&) = delete;
  CoeffTable& operator=(const CoeffTable&) = delete;

  // b_{lambda, k}^{|lambda|+k}.
  Rational b_extend(const Partition& lambda, int k);
  // b_lambda^{|lambda|}; the smallest part is the one peeled last.
  Rational b_lambda_n(const Partition& lambda);
  // b_lambda^n peeling parts in the given sequence: the last entry is k, and
  // the remaining prefix (with its induced order) is peeled the same way.
  Rational b_lambda_n_peeled(const std::vector<int>& peel_sequence);

  Rational b_lambda_mu(const Partition& lambda, const Partition& mu);
  Rational a_lambda_mu(const Partition& lambda, const Partition& mu);

  CoeffMatrix b_matrix(int n);
  CoeffMatrix a_matrix(int n);

  // m_{lambda mu}^nu, keyed by nu.
  std::map<Partition, Rational> cup_coeff(const Partition& lambda, const Partition& mu);
  // Nonzero a_lambda^mu keyed by mu; witten_expansion({}) = {{}: 1}.
  std::map<Partition, Rational> witten_expansion(const Partition& lambda);

  // Largest weight whose a matrix has been built.
  int scope() const;

 private:
  Rational b_lambda_n_locked(const Partition& lambda);
  Rational b_extend_locked(const std::vector<int>& lambda, int k,
                           const std::function<Rational(const std::vector<int>&)>& one_part);
  const CoeffMatrix& a_matrix_locked(int n);

  mutable std::recursive_mutex mutex_;
  std::map<Partition, Rational> b_n_;
  std::map<std::vector<int>, Rational> b_peeled_;
  std::map<std::pair<Partition, Partition>, Rational> b_mu_;
  std::map<int, CoeffMatrix> a_matrices_;
};

// h(0) = 1, h(n+1) = sum_{a+b+c=n} h(a)h(b)h(c)(2a+1)(2c+1)/((2a+3)(n+1)).
Rational h_sequence(int n);

// b_{r,k}^{r+k} = b_r b_k (2r+2k+3) + b_{r+k}.
Rational closed_b_pair(int r, int k);
// a_{r,k}^{r+k} = -(a_r a_k + (2r+2k+3) a_{r+k}) / Sym(r,k).
Rational closed_a_pair(int r, int k);

// Zero-padded coefficients. For b the factor (2n+r) uses the weight n and
// the number of parts r of the superscript mu; for a, of the subscript
// lambda. Both are the valence count of the Kontsevich-cycle side.
Rational degenerate_b(CoeffTable& table, const Partition& lambda, int p, const Partition& mu, int q);
Rational degenerate_a(CoeffTable& table, const Partition& lambda, int m, const Partition& mu, int i);

}  // namespace kcycles
