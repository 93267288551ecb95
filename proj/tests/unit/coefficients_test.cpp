#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "generators.hpp"
#include "kcycles/coefficients.hpp"
#include "kcycles/sequences.hpp"
#include "oracles.hpp"

namespace {

using kcycles::CoeffTable;
using kcycles::Partition;
using kcycles::Rational;

TEST(Coefficients, SinglePartValues) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(kcycles::b_single(n), oracle::b_single(n));
    EXPECT_EQ(kcycles::a_single(n) * kcycles::b_single(n), Rational(1));
  }
  EXPECT_EQ(kcycles::a_single(1), Rational(12));
}

TEST(Coefficients, Anchors) {
  CoeffTable t;
  EXPECT_EQ(t.b_lambda_n({1}), Rational(1, 12));
  EXPECT_EQ(t.b_lambda_n({1, 1}), Rational(29, 720));
  EXPECT_EQ(t.b_lambda_n({1, 1, 1}), Rational(263, 6720));
  EXPECT_EQ(t.b_lambda_n({1, 1, 1, 1}), Rational(23479, 403200));
  EXPECT_EQ(t.b_lambda_n({2, 1}), Rational(-19, 3360));
  EXPECT_EQ(t.b_lambda_mu({1, 1, 1}, {2, 1}), Rational(29, 2880));
  EXPECT_EQ(t.b_lambda_mu({2, 1}, {2, 1}), Rational(-1, 1440));
}

TEST(Coefficients, ExtendByOneMatchesSpecialFormula) {
  // b_{lambda 1}^{n} through the k = 1 formula, which needs only b_lambda^mu
  // with at most three target parts.
  CoeffTable t;
  for (int w = 1; w <= 5; ++w) {
    for (const Partition& lambda : kcycles::partitions_of(w)) {
      const Rational expected = oracle::b_extend_by_one(
          lambda.parts(), [&](const std::vector<int>& l, const std::vector<int>& mu) {
            if (mu.size() > l.size()) return Rational(0);
            return t.b_lambda_mu(Partition(l), Partition(mu));
          });
      EXPECT_EQ(t.b_extend(lambda, 1), expected) << lambda.key();
      EXPECT_EQ(t.b_lambda_n(lambda.merged(Partition{1})), t.b_extend(lambda, 1)) << lambda.key();
    }
  }
}

TEST(Coefficients, OnesSequenceMatchesH) {
  CoeffTable t;
  for (int n = 1; n <= 6; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    Rational scale(oracle::factorial(n), kcycles::Integer(1) << (2 * n));
    EXPECT_EQ(t.b_lambda_n(ones), kcycles::h_sequence(n) * scale) << n;
  }
}

TEST(Coefficients, SumOfProductsMatchesSurjectionOracle) {
  CoeffTable t;
  for (int w = 1; w <= 5; ++w) {
    for (const Partition& lambda : kcycles::partitions_of(w)) {
      for (const Partition& mu : kcycles::partitions_of(w)) {
        const Rational expected = oracle::surjection_sum(
            lambda.parts(), mu.parts(),
            [&](const std::vector<int>& block, int) { return t.b_lambda_n(Partition(block)); });
        EXPECT_EQ(t.b_lambda_mu(lambda, mu), expected) << lambda.key() << " / " << mu.key();
      }
    }
  }
}

TEST(Coefficients, PeelOrderDoesNotMatter) {
  CoeffTable t;
  gen::Source src(77);
  for (int i = 0; i < 15; ++i) {
    const Partition p = src.partition(src.uniform(1, 6));
    std::vector<int> seq = p.parts();
    std::sort(seq.begin(), seq.end());
    do {
      EXPECT_EQ(t.b_lambda_n_peeled(seq), t.b_lambda_n(p)) << p.key();
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST(Coefficients, MatricesAreMutuallyInverse) {
  CoeffTable t;
  for (int n = 1; n <= 5; ++n) {
    const auto b = t.b_matrix(n);
    const auto a = t.a_matrix(n);
    EXPECT_TRUE((b * a).is_identity()) << n;
    EXPECT_TRUE((a * b).is_identity()) << n;
    EXPECT_EQ(b.order, kcycles::partitions_of(n));
    // Lower triangular: b_lambda^mu vanishes when mu has more parts.
    for (std::size_t i = 0; i < b.order.size(); ++i) {
      for (std::size_t j = i + 1; j < b.order.size(); ++j) EXPECT_TRUE(b.entries[i][j].is_zero());
    }
  }
}

TEST(Coefficients, ClosedPairsAgreeWithRecursion) {
  CoeffTable t;
  for (int r = 1; r <= 4; ++r) {
    for (int k = 1; r + k <= 6; ++k) {
      EXPECT_EQ(t.b_lambda_n({r, k}), kcycles::closed_b_pair(r, k)) << r << "," << k;
      EXPECT_EQ(t.a_lambda_mu({r, k}, {r + k}), kcycles::closed_a_pair(r, k)) << r << "," << k;
    }
  }
}

TEST(Coefficients, CupProductAnchor) {
  CoeffTable t;
  const auto m = t.cup_coeff({1}, {1});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at(Partition{1, 1}), Rational(2));
  EXPECT_EQ(m.at(Partition{2}), Rational(29, 5));
}

TEST(Coefficients, CupProductIsCommutative) {
  CoeffTable t;
  EXPECT_EQ(t.cup_coeff({2}, {1}), t.cup_coeff({1}, {2}));
  EXPECT_EQ(t.cup_coeff({1, 1}, {1}), t.cup_coeff({1}, {1, 1}));
}

TEST(Coefficients, WittenExpansion) {
  CoeffTable t;
  const auto w = t.witten_expansion({1, 1, 1});
  EXPECT_EQ(w.at(Partition{1, 1, 1}), Rational(288));
  EXPECT_EQ(w.at(Partition{2, 1}), Rational(4176));
  EXPECT_EQ(w.at(Partition{3}), Rational(20736));
  for (const auto& [mu, v] : w) EXPECT_EQ(v, t.a_lambda_mu({1, 1, 1}, mu));
}

TEST(Coefficients, ConcurrentQueriesAgree) {
  CoeffTable shared;
  std::vector<Rational> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] { results[i] = shared.b_lambda_mu({2, 1, 1, 1}, {3, 2}); });
  }
  for (auto& th : threads) th.join();
  CoeffTable fresh;
  for (const auto& r : results) EXPECT_EQ(r, fresh.b_lambda_mu({2, 1, 1, 1}, {3, 2}));
}

TEST(Coefficients, RejectsWeightMismatch) {
  CoeffTable t;
  EXPECT_THROW(t.b_lambda_mu({2}, {1}), std::invalid_argument);
}

// Padded coefficients: zeros in the subscript are distinct labels; a block
// with target t > 0 holding nu and m zeros contributes (2t+1)^m/(-2)^m b_nu^t,
// a zero-target block of m zeros contributes 1/(-2)^m.
Rational padded_oracle(CoeffTable& t, const Partition& lambda, int p, const Partition& mu, int q) {
  std::vector<int> from = lambda.parts();
  from.insert(from.end(), static_cast<std::size_t>(p), 0);
  std::vector<int> to = mu.parts();
  to.insert(to.end(), static_cast<std::size_t>(q), 0);
  return oracle::surjection_sum(from, to, [&](const std::vector<int>& block, int target) {
    std::vector<int> nu;
    long zeros = 0;
    for (int v : block) {
      if (v == 0) {
        ++zeros;
      } else {
        nu.push_back(v);
      }
    }
    Rational factor = Rational(-2).pow(static_cast<unsigned>(zeros)).inverse();
    if (target == 0) return factor;
    factor *= Rational(2 * target + 1).pow(static_cast<unsigned>(zeros));
    return factor * t.b_lambda_n(Partition(nu));
  });
}

TEST(Degenerate, PureZerosAreStirlingNumbers) {
  CoeffTable t;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const Rational expected(oracle::factorial(n) * kcycles::stirling_second(m, n), kcycles::pow_minus_two(m));
      EXPECT_EQ(kcycles::degenerate_b(t, Partition(), m, Partition(), n), expected) << m << " " << n;
    }
  }
}

TEST(Degenerate, PaddedMatchesSurjectionOracle) {
  CoeffTable t;
  for (int w = 1; w <= 3; ++w) {
    for (const Partition& lambda : kcycles::partitions_of(w)) {
      for (const Partition& mu : kcycles::partitions_of(w)) {
        for (int p = 0; p <= 3; ++p) {
          for (int q = 0; q <= p; ++q) {
            EXPECT_EQ(kcycles::degenerate_b(t, lambda, p, mu, q), padded_oracle(t, lambda, p, mu, q))
                << lambda.key() << "+0^" << p << " / " << mu.key() << "+0^" << q;
          }
        }
      }
    }
  }
}

TEST(Degenerate, PaddedAInvertsPaddedB) {
  CoeffTable t;
  for (int w = 0; w <= 2; ++w) {
    std::vector<std::pair<Partition, int>> basis;
    for (const Partition& p : kcycles::partitions_of(w)) {
      for (int z = 0; z <= 3; ++z) {
        if (!p.empty() || z > 0) basis.emplace_back(p, z);
      }
    }
    for (const auto& [lp, lz] : basis) {
      for (const auto& [rp, rz] : basis) {
        Rational sum;
        for (const auto& [mp, mz] : basis) {
          if (mz > lz || rz > mz) continue;
          sum += kcycles::degenerate_b(t, lp, lz, mp, mz) * kcycles::degenerate_a(t, mp, mz, rp, rz);
        }
        EXPECT_EQ(sum, Rational(lp == rp && lz == rz ? 1 : 0));
      }
    }
  }
}

}  // namespace
