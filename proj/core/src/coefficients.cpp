#include "kcycles/coefficients.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kcycles/errors.hpp"
#include "kcycles/sequences.hpp"
#include "kcycles/tree_poly.hpp"

namespace kcycles {

Rational a_single(int n) {
  if (n < 1) throw std::invalid_argument("a_single: n must be >= 1");
  return Rational(pow_minus_two(n + 1) * double_factorial(2L * n + 1));
}

Rational b_single(int n) { return a_single(n).inverse(); }

std::size_t CoeffMatrix::index_of(const Partition& p) const {
  auto it = std::find(order.begin(), order.end(), p);
  if (it == order.end()) throw std::out_of_range("partition " + p.key() + " is not in the matrix order");
  return static_cast<std::size_t>(it - order.begin());
}

const Rational& CoeffMatrix::at(const Partition& row, const Partition& col) const {
  return entries[index_of(row)][index_of(col)];
}

CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.order != b.order) throw ShapeMismatch("coefficient matrices over different partition orders");
  const std::size_t n = a.order.size();
  CoeffMatrix out{a.weight, a.order, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a.entries[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out.entries[i][j] += a.entries[i][l] * b.entries[l][j];
    }
  }
  return out;
}

bool CoeffMatrix::is_identity() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (entries[i][j] != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

namespace {

struct SurjectionSearch {
  const std::vector<int>& lambda;
  const std::vector<int>& mu;
  const std::function<Rational(const std::vector<int>&)>& one_part;
  std::vector<int> remaining;            // mu_j minus the parts assigned so far
  std::vector<std::vector<int>> blocks;  // parts assigned to each mu_j
  Rational total;

  void assign(std::size_t i) {
    if (i == lambda.size()) {
      Rational product(1);
      for (std::size_t j = 0; j < mu.size(); ++j) {
        if (!blocks[j].empty() && remaining[j] == 0) continue;
        return;
      }
      for (const auto& block : blocks) {
        product *= one_part(block);
        if (product.is_zero()) return;
      }
      total += product;
      return;
    }
    // Parts still to place must cover every empty block.
    std::size_t empty_blocks = 0;
    for (const auto& block : blocks) empty_blocks += block.empty() ? 1 : 0;
    if (lambda.size() - i < empty_blocks) return;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (remaining[j] < lambda[i]) continue;
      remaining[j] -= lambda[i];
      blocks[j].push_back(lambda[i]);
      assign(i + 1);
      blocks[j].pop_back();
      remaining[j] += lambda[i];
    }
  }
};

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Rational q_scale(int k) {
  return Rational(pow_minus_two(k + 1) * double_factorial(2L * k - 1)).inverse();
}

}  // namespace

Rational sum_over_surjections(const std::vector<int>& lambda, const std::vector<int>& mu,
                              const std::function<Rational(const std::vector<int>&)>& one_part) {
  if (sum_of(lambda) != sum_of(mu)) throw std::invalid_argument("sum of products: weights differ");
  if (mu.size() > lambda.size()) return Rational(0);
  SurjectionSearch search{lambda, mu, one_part, mu, std::vector<std::vector<int>>(mu.size()), Rational(0)};
  search.assign(0);
  return search.total;
}

Rational CoeffTable::b_extend_locked(const std::vector<int>& lambda, int k,
                                     const std::function<Rational(const std::vector<int>&)>& one_part) {
  if (k < 1) throw std::invalid_argument("b_extend: k must be >= 1");
  const int m = sum_of(lambda);
  const std::size_t slots = 2 * static_cast<std::size_t>(k) + 1;
  std::map<Partition, Rational> b_by_mu;
  Rational total;
  std::vector<int> tuple(slots);
  std::vector<int> nonzero;
  for (const auto& comp : Compositions(m, static_cast<int>(slots))) {
    nonzero.clear();
    for (int v : comp) {
      if (v > 0) nonzero.push_back(v);
    }
    if (nonzero.size() > lambda.size()) continue;
    Partition mu(nonzero);
    auto it = b_by_mu.find(mu);
    if (it == b_by_mu.end()) {
      it = b_by_mu.emplace(mu, lambda.empty() ? Rational(1) : sum_over_surjections(lambda, mu.parts(), one_part)).first;
    }
    if (it->second.is_zero()) continue;
    tuple[0] = 2 * comp[0] + 3;
    for (std::size_t i = 1; i < slots; ++i) tuple[i] = 2 * comp[i] + 1;
    total += it->second * Rational(2L * comp[0] + 1, 2L * comp[0] + 3) * q_eval(tuple);
  }
  return total * q_scale(k);
}

Rational CoeffTable::b_extend(const Partition& lambda, int k) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return b_extend_locked(lambda.parts(), k,
                         [this](const std::vector<int>& block) { return b_lambda_n_locked(Partition(block)); });
}

Rational CoeffTable::b_lambda_n_locked(const Partition& lambda) {
  if (lambda.empty()) return Rational(1);
  auto it = b_n_.find(lambda);
  if (it != b_n_.end()) return it->second;
  // Parts are stored in descending order, so the last one is the smallest.
  const int k = lambda.parts().back();
  std::vector<int> rest(lambda.parts().begin(), lambda.parts().end() - 1);
  const Rational value = b_extend_locked(rest, k, [this](const std::vector<int>& block) {
    return b_lambda_n_locked(Partition(block));
  });
  b_n_.emplace(lambda, value);
  return value;
}

Rational CoeffTable::b_lambda_n(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("b_lambda_n: empty partition");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return b_lambda_n_locked(lambda);
}

Rational CoeffTable::b_lambda_n_peeled(const std::vector<int>& peel_sequence) {
  if (peel_sequence.empty()) throw std::invalid_argument("b_lambda_n_peeled: empty sequence");
  for (int part : peel_sequence) {
    if (part < 1) throw std::invalid_argument("b_lambda_n_peeled: parts must be >= 1");
  }
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = b_peeled_.find(peel_sequence);
  if (it != b_peeled_.end()) return it->second;
  const std::vector<int> rest(peel_sequence.begin(), peel_sequence.end() - 1);
  const Rational value = b_extend_locked(rest, peel_sequence.back(), [this](const std::vector<int>& block) {
    return b_lambda_n_peeled(block);
  });
  b_peeled_.emplace(peel_sequence, value);
  return value;
}

Rational CoeffTable::b_lambda_mu(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("b_lambda_mu: weights differ (" + std::to_string(lambda.weight()) + " vs " +
                                std::to_string(mu.weight()) + ")");
  }
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const auto key = std::make_pair(lambda, mu);
  auto it = b_mu_.find(key);
  if (it != b_mu_.end()) return it->second;
  const Rational value = sum_over_surjections(lambda.parts(), mu.parts(), [this](const std::vector<int>& block) {
    return b_lambda_n_locked(Partition(block));
  });
  b_mu_.emplace(key, value);
  return value;
}

CoeffMatrix CoeffTable::b_matrix(int n) {
  if (n < 0) throw std::invalid_argument("b_matrix: weight must be >= 0");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  CoeffMatrix b{n, partitions_of(n), {}};
  for (const Partition& row : b.order) {
    std::vector<Rational> entries;
    for (const Partition& col : b.order) entries.push_back(b_lambda_mu(row, col));
    b.entries.push_back(std::move(entries));
  }
  return b;
}

const CoeffMatrix& CoeffTable::a_matrix_locked(int n) {
  auto it = a_matrices_.find(n);
  if (it != a_matrices_.end()) return it->second;
  const CoeffMatrix b = b_matrix(n);
  const std::size_t size = b.order.size();
  // Ordering by number of parts makes B lower triangular: b_lambda^mu needs a
  // surjection, so mu has at most as many parts as lambda, and equal counts
  // force mu = lambda.
  for (std::size_t i = 0; i < size; ++i) {
    if (b.entries[i][i].is_zero()) {
      throw InternalInconsistency("b matrix has a zero diagonal entry at " + b.order[i].key());
    }
    for (std::size_t j = i + 1; j < size; ++j) {
      if (!b.entries[i][j].is_zero()) {
        throw InternalInconsistency("b matrix is not lower triangular at (" + b.order[i].key() + ", " +
                                    b.order[j].key() + ")");
      }
    }
  }
  CoeffMatrix a{n, b.order, std::vector<std::vector<Rational>>(size, std::vector<Rational>(size))};
  for (std::size_t i = 0; i < size; ++i) {
    const Rational inv_diag = b.entries[i][i].inverse();
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc(i == j ? 1 : 0);
      for (std::size_t l = j; l < i; ++l) {
        if (!b.entries[i][l].is_zero()) acc -= b.entries[i][l] * a.entries[l][j];
      }
      a.entries[i][j] = acc * inv_diag;
    }
  }
  return a_matrices_.emplace(n, std::move(a)).first->second;
}

CoeffMatrix CoeffTable::a_matrix(int n) {
  if (n < 0) throw std::invalid_argument("a_matrix: weight must be >= 0");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return a_matrix_locked(n);
}

Rational CoeffTable::a_lambda_mu(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("a_lambda_mu: weights differ");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return a_matrix_locked(lambda.weight()).at(lambda, mu);
}

std::map<Partition, Rational> CoeffTable::cup_coeff(const Partition& lambda, const Partition& mu) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const auto row_l = witten_expansion(lambda);
  const auto row_m = witten_expansion(mu);
  std::map<Partition, Rational> out;
  for (const Partition& nu : partitions_of(lambda.weight() + mu.weight())) {
    Rational total;
    for (const auto& [alpha, a_alpha] : row_l) {
      for (const auto& [beta, a_beta] : row_m) {
        const Rational b = b_lambda_mu(alpha.merged(beta), nu);
        if (!b.is_zero()) total += a_alpha * a_beta * b;
      }
    }
    if (!total.is_zero()) out.emplace(nu, total);
  }
  return out;
}

std::map<Partition, Rational> CoeffTable::witten_expansion(const Partition& lambda) {
  if (lambda.empty()) return {{Partition(), Rational(1)}};
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  const CoeffMatrix& a = a_matrix_locked(lambda.weight());
  const std::size_t row = a.index_of(lambda);
  std::map<Partition, Rational> out;
  for (std::size_t j = 0; j < a.order.size(); ++j) {
    if (!a.entries[row][j].is_zero()) out.emplace(a.order[j], a.entries[row][j]);
  }
  return out;
}

int CoeffTable::scope() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return a_matrices_.empty() ? 0 : a_matrices_.rbegin()->first;
}

Rational h_sequence(int n) {
  if (n < 0) throw std::invalid_argument("h_sequence: n must be >= 0");
  std::vector<Rational> h{Rational(1)};
  for (int next = 1; next <= n; ++next) {
    const int total = next - 1;
    Rational sum;
    for (int a = 0; a <= total; ++a) {
      for (int b = 0; a + b <= total; ++b) {
        const int c = total - a - b;
        sum += h[a] * h[b] * h[c] * Rational(static_cast<long>(2 * a + 1) * (2 * c + 1), 2L * a + 3);
      }
    }
    h.push_back(sum * Rational(1L, static_cast<long>(next)));
  }
  return h[static_cast<std::size_t>(n)];
}

Rational closed_b_pair(int r, int k) {
  if (r < 1 || k < 1) throw std::invalid_argument("closed_b_pair: r, k must be >= 1");
  return b_single(r) * b_single(k) * Rational(2 * r + 2 * k + 3) + b_single(r + k);
}

Rational closed_a_pair(int r, int k) {
  if (r < 1 || k < 1) throw std::invalid_argument("closed_a_pair: r, k must be >= 1");
  const Rational numerator = -(a_single(r) * a_single(k) + Rational(2 * r + 2 * k + 3) * a_single(r + k));
  return numerator * Rational(1L, sym_count(std::vector<int>{r, k}));
}

Rational degenerate_b(CoeffTable& table, const Partition& lambda, int p, const Partition& mu, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("degenerate_b: zero counts must be >= 0");
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("degenerate_b: weights differ");
  if (p < q) return Rational(0);
  const Rational base = table.b_lambda_mu(lambda, mu);
  if (base.is_zero()) return base;
  const long shift = 2L * lambda.weight() + static_cast<long>(mu.length());
  Rational sum;
  Integer shift_power = 1;
  for (int m = 0; m <= p - q; ++m) {
    if (m > 0) shift_power *= shift;
    sum += Rational(binomial(p, m) * factorial(q) * stirling_second(p - m, q) * shift_power);
  }
  return sum * Rational(Integer(1), pow_minus_two(p)) * base;
}

Rational degenerate_a(CoeffTable& table, const Partition& lambda, int m, const Partition& mu, int i) {
  if (m < 0 || i < 0) throw std::invalid_argument("degenerate_a: zero counts must be >= 0");
  if (i > m) throw std::invalid_argument("degenerate_a: need i <= m");
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("degenerate_a: weights differ");
  const Rational base = lambda.empty() ? Rational(1) : table.a_lambda_mu(lambda, mu);
  if (base.is_zero()) return base;
  const long shift = -2L * lambda.weight() - static_cast<long>(lambda.length());
  Rational sum;
  Integer shift_power = 1;
  for (int j = i; j <= m; ++j) {
    if (j > i) shift_power *= shift;
    sum += Rational(stirling_first_signed(m, j) * binomial(j, i) * shift_power);
  }
  return sum * Rational(pow_minus_two(i), factorial(m)) * base;
}

}  // namespace kcycles
