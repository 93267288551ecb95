#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "kcycles/closed_forms.hpp"
#include "kcycles/sign_sums.hpp"
#include "kcycles/tree_poly.hpp"
#include "oracles.hpp"

namespace {

using kcycles::MultiPoly;
using kcycles::Rational;

std::vector<Rational> as_point(const std::vector<int>& tuple) { return {tuple.begin(), tuple.end()}; }

TEST(TreePoly, RecursionMatchesTreeOracle) {
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(kcycles::reduced_tree_poly(k), oracle::reduced_tree_poly(k)) << k;
}

TEST(TreePoly, SmallCasesByHand) {
  EXPECT_EQ(kcycles::reduced_tree_poly(0), MultiPoly::constant(1, 1));
  EXPECT_EQ(kcycles::reduced_tree_poly(1), MultiPoly::variable_sum(3, 0, 1) * MultiPoly::variable(3, 2));
  EXPECT_EQ(kcycles::tree_poly(1),
            MultiPoly::variable(3, 0) * MultiPoly::variable_sum(3, 0, 1) * MultiPoly::variable(3, 2));
}

TEST(TreePoly, FullPolynomialMatchesShuffleOracleAtRandomTuples) {
  gen::Source src(7);
  for (int i = 0; i < 20; ++i) {
    const int k = src.uniform(0, 2);
    const auto tuple = src.odd_tuple(k, 3);
    if (std::accumulate(tuple.begin(), tuple.end(), 0) > 9) continue;
    EXPECT_EQ(kcycles::poly_eval(kcycles::tree_poly(k), as_point(tuple)), Rational(oracle::tree_poly_value(tuple)));
  }
}

TEST(TreePoly, QEvalIsTreePolyOverPartialSums) {
  // For k = 0 there is a single shuffle and Q_0 = T_0 = x0.
  EXPECT_EQ(kcycles::q_eval(std::vector<int>{7}), Rational(7));
  gen::Source src(19);
  for (int i = 0; i < 30; ++i) {
    const int k = src.uniform(1, 4);
    const auto tuple = src.odd_tuple(k, 7);
    Rational denominator(1);
    Rational z(tuple[0]);
    for (int j = 1; j <= 2 * k - 1; ++j) {
      z += tuple[static_cast<std::size_t>(j)];
      denominator *= z;
    }
    const Rational expected = kcycles::poly_eval(kcycles::reduced_tree_poly(k), as_point(tuple)) / denominator;
    EXPECT_EQ(kcycles::q_eval(tuple), expected);
    EXPECT_EQ(kcycles::q_eval(kcycles::OddTuple(tuple)), expected);
  }
}

TEST(TreePoly, OddTupleValidation) {
  EXPECT_THROW(kcycles::OddTuple({1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(kcycles::OddTuple({1, 1}), std::invalid_argument);
  EXPECT_THROW(kcycles::OddTuple({}), std::invalid_argument);
}

TEST(TreePoly, LZeroIsReducedTreePoly) {
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(kcycles::l_poly(k, 0), kcycles::reduced_tree_poly(k));
}

TEST(TreePoly, PFamilySumsToReducedTreePoly) {
  for (int k = 0; k <= 3; ++k) {
    const auto family = kcycles::p_family(k);
    MultiPoly sum(2 * static_cast<std::size_t>(k) + 1);
    for (const auto& [c, p] : family->polys) {
      EXPECT_NE(c % 2, 0) << "only odd frequencies appear";
      if (c > 0) sum += p;
    }
    // T~_k = 4^-k sum over positive c of P^c.
    sum *= Rational(kcycles::Integer(1), kcycles::Integer(1) << (2 * k));
    EXPECT_EQ(sum, kcycles::reduced_tree_poly(k)) << k;
  }
}

TEST(TreePoly, GRecursionHolds) {
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(kcycles::verify_g_recursion(k, 4)) << k;
}

TEST(ClosedForms, OnesTupleAgainstShuffleOracle) {
  for (int k = 1; k <= 2; ++k) {
    for (int n = 1; n <= 3; n += 2) {
      for (int m = 1; m <= 3; m += 2) {
        std::vector<int> tuple(2 * static_cast<std::size_t>(k) + 1, 1);
        tuple.front() = n;
        tuple.back() = m;
        EXPECT_EQ(kcycles::t_closed_ones(k, n, m), oracle::tree_poly_value(tuple));
      }
    }
  }
}

TEST(ClosedForms, QOnesIsDoubleFactorialRatio) {
  // Q_k(2j-1, 1, ..., 1) = (2j-1)!!(2k-1)!!/(2j+2k-3)!!
  for (int k = 1; k <= 5; ++k) {
    for (int j = 1; j <= 5; ++j) {
      const Rational expected(oracle::double_factorial(2L * j - 1) * oracle::double_factorial(2L * k - 1),
                              oracle::double_factorial(2L * j + 2 * k - 3));
      EXPECT_EQ(kcycles::q_closed_ones(k, 2 * j - 1), expected);
    }
  }
}

TEST(ClosedForms, MainTupleAgainstPolynomial) {
  for (int k = 1; k <= 3; ++k) {
    const MultiPoly t = kcycles::tree_poly(k);
    for (int r = 0; r <= 3; ++r) {
      for (int p = 0; p <= 2 * k - 1; ++p) {
        std::vector<int> tuple{3};
        tuple.insert(tuple.end(), static_cast<std::size_t>(p), 1);
        tuple.push_back(2 * r + 1);
        tuple.insert(tuple.end(), static_cast<std::size_t>(2 * k - 1 - p), 1);
        EXPECT_EQ(kcycles::poly_eval(t, as_point(tuple)), Rational(kcycles::t_closed_main(k, p, 2 * k - 1 - p, r)));
      }
    }
  }
  EXPECT_EQ(kcycles::t_closed_main(1, 1, 0, 0), oracle::tree_poly_value({3, 1, 1}));
}

TEST(ClosedForms, DoubleSumIdentity) {
  for (int k = 1; k <= 3; ++k) {
    for (int r = 0; r <= 3; ++r) {
      const auto sides = kcycles::double_sum_identity(k, r);
      EXPECT_EQ(sides.lhs, sides.rhs) << k << " " << r;
    }
  }
}

TEST(ClosedForms, SignSumTablesAgainstOracle) {
  using kcycles::SignSumVariant;
  for (auto v : {SignSumVariant::kX0, SignSumVariant::kX1, SignSumVariant::kX2}) {
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; n + m <= 8; ++m) {
        const auto xe = kcycles::xe_tables(v, n, m);
        EXPECT_EQ(xe.x, oracle::shuffle_sign_sum(static_cast<int>(v), n, m)) << n << " " << m;
        EXPECT_EQ(xe.e, Rational(xe.x, oracle::binomial(n + m, n)));
        EXPECT_EQ(kcycles::xe_expectation_column(v, n, m), xe.e);
      }
    }
  }
}

TEST(ClosedForms, RejectsEvenEntries) {
  EXPECT_THROW(kcycles::t_closed_ones(2, 2, 1), std::invalid_argument);
  EXPECT_THROW(kcycles::q_closed_ones(1, 4), std::invalid_argument);
  EXPECT_THROW(kcycles::t_closed_main(2, 1, 1, 0), std::invalid_argument);
}

}  // namespace
