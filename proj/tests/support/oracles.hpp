#pragma once

// Independent reference implementations used by the tests. They share only
// the exact number types with the library and are written for clarity, not
// speed.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "kcycles/multipoly.hpp"
#include "kcycles/rational.hpp"

namespace oracle {

using kcycles::Integer;
using kcycles::MultiPoly;
using kcycles::Rational;

// Parity of a permutation of 0..n-1 from its cycle decomposition.
inline int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(perm[v])) {
      seen[v] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

// Sign of the order in which distinct values appear, i.e. of the permutation
// sorting them.
inline int order_sign(const std::vector<int>& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] < values[b]; });
  return permutation_sign(idx);
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer double_factorial(long n) {
  Integer r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline Rational b_single(int n) {
  Integer a = double_factorial(2L * n + 1);
  if ((n + 1) % 2 == 1) a = -a;
  for (int i = 0; i <= n; ++i) a *= 2;
  return Rational(Integer(1), a);
}

// Increasing trees as parent arrays, generated by attaching each vertex in
// turn to an earlier one.
inline void for_each_increasing_tree(int k, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = 2 * k + 1;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::function<void(int)> attach = [&](int v) {
    if (v == n) {
      visit(parent);
      return;
    }
    for (int p = 0; p < v; ++p) {
      parent[static_cast<std::size_t>(v)] = p;
      attach(v + 1);
    }
  };
  attach(1);
}

// x^T: exponent of x_i counts components of T minus vertex i with an even
// number of vertices, found by flood fill on the adjacency lists.
inline kcycles::Exponents tree_monomial(const std::vector<int>& parent) {
  const std::size_t n = parent.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t v = 1; v < n; ++v) {
    adj[v].push_back(parent[v]);
    adj[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
  }
  kcycles::Exponents e(n, 0);
  for (std::size_t removed = 0; removed < n; ++removed) {
    std::vector<bool> seen(n, false);
    seen[removed] = true;
    for (int start : adj[removed]) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> stack{start};
      seen[static_cast<std::size_t>(start)] = true;
      int size = 0;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++size;
        for (int w : adj[static_cast<std::size_t>(v)]) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
        }
      }
      if (size % 2 == 0) ++e[removed];
    }
  }
  return e;
}

inline MultiPoly reduced_tree_poly(int k) {
  MultiPoly p(2 * static_cast<std::size_t>(k) + 1);
  for_each_increasing_tree(k, [&](const std::vector<int>& parent) { p.add_term(tree_monomial(parent), 1); });
  return p;
}

// Letters are (kind, index) encoded as kind * 100 + index.
inline std::vector<std::vector<int>> cyclic_shuffle_words(const std::vector<int>& kinds) {
  std::vector<std::vector<int>> words(1);
  for (int i = 0; i < kinds[0]; ++i) words[0].push_back(i);
  for (std::size_t kind = 1; kind < kinds.size(); ++kind) {
    std::vector<int> block;
    for (int i = 0; i < kinds[kind]; ++i) block.push_back(static_cast<int>(kind) * 100 + i);
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      for (std::size_t pos = 1; pos <= w.size(); ++pos) {
        std::vector<int> longer(w.begin(), w.begin() + static_cast<long>(pos));
        longer.insert(longer.end(), block.begin(), block.end());
        longer.insert(longer.end(), w.begin() + static_cast<long>(pos), w.end());
        next.push_back(std::move(longer));
      }
    }
    words = std::move(next);
  }
  return words;
}

// T_k at the tuple: orientation of each word against the sorted letters,
// times the sum over one letter per kind of the sign of their order.
inline Integer tree_poly_value(const std::vector<int>& kinds) {
  Integer total = 0;
  for (const auto& word : cyclic_shuffle_words(kinds)) {
    const int orientation = order_sign(word);
    std::map<int, int> position;
    for (std::size_t p = 0; p < word.size(); ++p) position[word[p]] = static_cast<int>(p);
    long sum = 0;
    std::vector<int> pick(kinds.size(), 0);
    while (true) {
      std::vector<int> chosen;
      for (std::size_t kind = 0; kind < kinds.size(); ++kind) {
        chosen.push_back(position[static_cast<int>(kind) * 100 + pick[kind]]);
      }
      sum += order_sign(chosen);
      std::size_t kind = 0;
      while (kind < kinds.size() && ++pick[kind] == kinds[kind]) pick[kind++] = 0;
      if (kind == kinds.size()) break;
    }
    total += orientation * sum;
  }
  return total;
}

// Oriented sign sums of the shuffle families: variant 0 plain, 1 with a
// leading a_0, 2 with leading a_0 and trailing a_{n+1}.
inline Integer shuffle_sign_sum(int variant, int n, int m) {
  const int a_count = n + (variant >= 1 ? 1 : 0) + (variant == 2 ? 1 : 0);
  const int a_first = variant >= 1 ? 1 : 0;
  std::vector<bool> is_b(static_cast<std::size_t>(n + m), false);
  std::fill(is_b.end() - m, is_b.end(), true);
  Integer total = 0;
  do {
    // a's take labels 0..a_count-1, b's a_count..a_count+m-1.
    std::vector<int> word;
    if (variant >= 1) word.push_back(0);
    int next_a = a_first;
    int next_b = a_count;
    for (bool b : is_b) word.push_back(b ? next_b++ : next_a++);
    if (variant == 2) word.push_back(a_count - 1);
    const int orientation = order_sign(word);
    std::vector<int> position(word.size());
    for (std::size_t p = 0; p < word.size(); ++p) position[static_cast<std::size_t>(word[p])] = static_cast<int>(p);
    long sum = 0;
    for (int a = 0; a < a_count; ++a) {
      std::vector<int> chosen{position[static_cast<std::size_t>(a)]};
      for (int b = 0; b < m; ++b) chosen.push_back(position[static_cast<std::size_t>(a_count + b)]);
      sum += order_sign(chosen);
    }
    total += orientation * sum;
  } while (std::next_permutation(is_b.begin(), is_b.end()));
  return total;
}

inline Integer counting_sum(int n, int s) {
  std::vector<int> z(static_cast<std::size_t>(s), 1);
  long total = 0;
  while (true) {
    long a = 0;
    long b = 0;
    for (int j = 1; j <= n; ++j) {
      const long hits = std::count_if(z.begin(), z.end(), [j](int zi) { return j <= zi; });
      (hits % 2 == 1 ? a : b) += 1;
    }
    const int parity = std::accumulate(z.begin(), z.end(), 0) % 2;
    total += (parity == 0 ? 1 : -1) * (b - a);
    std::size_t i = 0;
    while (i < z.size() && ++z[i] > n) z[i++] = 1;
    if (i == z.size()) break;
  }
  return total;
}

// Number of partitions of n with parts <= max_part.
inline long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += partition_count(n - p, p);
  return total;
}

// Sum over labeled surjections of `from` onto `to` with block sums equal to
// the targets, of the product of block(blocks[j], to[j]).
inline Rational surjection_sum(const std::vector<int>& from, const std::vector<int>& to,
                               const std::function<Rational(const std::vector<int>&, int)>& block) {
  if (to.empty()) return from.empty() ? Rational(1) : Rational(0);
  Rational total;
  std::vector<std::size_t> f(from.size(), 0);
  while (true) {
    std::vector<std::vector<int>> blocks(to.size());
    for (std::size_t i = 0; i < from.size(); ++i) blocks[f[i]].push_back(from[i]);
    bool ok = true;
    for (std::size_t j = 0; j < to.size() && ok; ++j) {
      ok = !blocks[j].empty() && std::accumulate(blocks[j].begin(), blocks[j].end(), 0) == to[j];
    }
    if (ok) {
      Rational product(1);
      for (std::size_t j = 0; j < to.size(); ++j) product *= block(blocks[j], to[j]);
      total += product;
    }
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == to.size()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return total;
}

// b_{lambda,1}^n through the k = 1 specialization of the peeling recursion,
// which needs no tree polynomials: sum over a+b+c = n-1 of
// b_lambda^{[a,b,c]} (2a+1)(2c+1) / ((2a+3) 4). `b_lambda_mu` supplies the
// smaller coefficients.
inline Rational b_extend_by_one(const std::vector<int>& lambda,
                                const std::function<Rational(const std::vector<int>&, const std::vector<int>&)>& b_lambda_mu) {
  const int m = std::accumulate(lambda.begin(), lambda.end(), 0);
  Rational total;
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; a + b <= m; ++b) {
      const int c = m - a - b;
      std::vector<int> mu;
      for (int v : {a, b, c}) {
        if (v > 0) mu.push_back(v);
      }
      std::sort(mu.rbegin(), mu.rend());
      const Rational coeff = lambda.empty() ? Rational(mu.empty() ? 1 : 0) : b_lambda_mu(lambda, mu);
      total += coeff * Rational(static_cast<long>(2 * a + 1) * (2 * c + 1), 4L * (2 * a + 3));
    }
  }
  return total;
}

}  // namespace oracle
