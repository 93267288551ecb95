#pragma once

// Small seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "kcycles/multipoly.hpp"
#include "kcycles/partition.hpp"
#include "kcycles/rational.hpp"

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  kcycles::Rational rational(int bound = 20) {
    const int den = uniform(1, bound);
    return kcycles::Rational(static_cast<long>(uniform(-bound, bound)), static_cast<long>(den));
  }

  kcycles::MultiPoly poly(std::size_t num_vars, int max_terms = 5, int max_exp = 3) {
    kcycles::MultiPoly p(num_vars);
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      kcycles::Exponents e(num_vars);
      for (auto& x : e) x = static_cast<std::uint16_t>(uniform(0, max_exp));
      p.add_term(e, rational());
    }
    return p;
  }

  std::vector<kcycles::Rational> point(std::size_t n) {
    std::vector<kcycles::Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(9));
    return v;
  }

  kcycles::Partition partition(int weight) {
    std::vector<int> parts;
    int left = weight;
    while (left > 0) {
      const int p = uniform(1, left);
      parts.push_back(p);
      left -= p;
    }
    return kcycles::Partition(parts);
  }

  std::vector<int> odd_tuple(int k, int max_entry) {
    std::vector<int> t;
    for (int i = 0; i < 2 * k + 1; ++i) t.push_back(2 * uniform(0, (max_entry - 1) / 2) + 1);
    return t;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
