#pragma once

#include <utility>

#include "kcycles/rational.hpp"
#include "kcycles/sign_sums.hpp"

namespace kcycles {

// T_k(n, 1, .., 1, m) = (2k-1)!! m n (n+1)(n+3)..(n+2k-1), n and m odd.
// For k = 0 the tuple is (n) and m must equal n.
Integer t_closed_ones(int k, int n, int m);

// Q_k(n, 1, .., 1) = (2k-1)!! n!! / (n+2k-2)!!.
Rational q_closed_ones(int k, int n);

// Single-sum closed form for T_k(3, 1^p, 2r+1, 1^q) with p + q = 2k - 1.
Integer t_closed_main(int k, int p, int q, int r);

struct XeValue {
  Integer x;   // sum of oriented sign sums
  Rational e;  // average over the C(n+m, n) shuffles
};

// Parity-class closed forms for the X0/X1/X2 shuffle families.
XeValue xe_tables(SignSumVariant variant, int n, int m);

// The tabulated expectation column, independent of `xe_tables(..).x`.
Rational xe_expectation_column(SignSumVariant variant, int n, int m);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
};

// lhs: sum over p + q = 2k-1 of Q_k(3, 1^p, 2r+1, 1^q), term by term.
// rhs: 3(2k+2r+3)/(2k+1) - 3 (2r+3)!! (2k-1)!! / (2k+2r+1)!!.
IdentitySides double_sum_identity(int k, int r);

}  // namespace kcycles
