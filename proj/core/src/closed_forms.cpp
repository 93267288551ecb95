#include "kcycles/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "kcycles/sequences.hpp"
#include "kcycles/tree_poly.hpp"

namespace kcycles {

namespace {

void require_odd_positive(int value, const char* what) {
  if (value < 1 || value % 2 == 0) {
    throw std::invalid_argument(std::string(what) + " must be a positive odd integer, got " + std::to_string(value));
  }
}

// Parity class of (n, m): n = 2j or 2j-1, m = 2k or 2k-1.
struct ParityClass {
  bool n_even;
  bool m_even;
  long j;
  long k;
};

ParityClass classify(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("sign-sum tables need n, m >= 0");
  return {n % 2 == 0, m % 2 == 0, (n + 1) / 2, (m + 1) / 2};
}

}  // namespace

Integer t_closed_ones(int k, int n, int m) {
  if (k < 0) throw std::invalid_argument("t_closed_ones: k must be >= 0");
  require_odd_positive(n, "n");
  require_odd_positive(m, "m");
  if (k == 0) {
    if (n != m) throw std::invalid_argument("t_closed_ones: for k = 0 the tuple is (n), so m must equal n");
    return Integer(n);
  }
  Integer result = double_factorial(2L * k - 1) * m * n;
  for (int i = 1; i <= 2 * k - 1; i += 2) result *= n + i;
  return result;
}

Rational q_closed_ones(int k, int n) {
  if (k < 0) throw std::invalid_argument("q_closed_ones: k must be >= 0");
  require_odd_positive(n, "n");
  return Rational(double_factorial(2L * k - 1) * double_factorial(n), double_factorial(n + 2L * k - 2));
}

Integer t_closed_main(int k, int p, int q, int r) {
  if (k < 1 || p < 0 || q < 0 || r < 0 || p + q != 2 * k - 1) {
    throw std::invalid_argument("t_closed_main: need k >= 1, p, q, r >= 0 and p + q = 2k - 1");
  }
  Rational total;
  for (long s = 0; s <= (q + 1) / 2; ++s) {
    const Rational falling(factorial(q), factorial(q - 2 * s + 1));
    const Integer bracket = Integer((q - 2 * s + 1) * (2L * r + 2 * s + 1)) - Integer(2 * s * (2L * k - 2 * s + 3));
    total += falling * Rational(binomial(r - 1 + s, s) * factorial(2L * k - 2 * s) * 3 * (k - s + 1) * bracket);
  }
  if (!total.is_integer()) throw std::logic_error("t_closed_main produced a non-integer");
  return total.numerator();
}

XeValue xe_tables(SignSumVariant variant, int n, int m) {
  const ParityClass pc = classify(n, m);
  const long j = pc.j;
  const long k = pc.k;
  Integer x;
  if (pc.n_even && pc.m_even) {
    const Integer c = binomial(j + k, j);
    switch (variant) {
      case SignSumVariant::kX0: x = 2 * j * c; break;
      case SignSumVariant::kX1: x = (2 * j + 1) * c; break;
      case SignSumVariant::kX2: x = (2 * j + 2) * c; break;
    }
  } else if (pc.n_even) {
    x = variant == SignSumVariant::kX1 ? binomial(j + k - 1, j) : Integer(0);
  } else if (pc.m_even) {
    const Integer c = binomial(j + k - 1, k);
    switch (variant) {
      case SignSumVariant::kX0: x = (2 * j + 2 * k - 1) * c; break;
      case SignSumVariant::kX1: x = (2 * j + 2 * k) * c; break;
      case SignSumVariant::kX2: x = (2 * j + 2 * k + 1) * c; break;
    }
  } else {
    const Integer c = 2 * k * binomial(j + k - 1, k);
    x = variant == SignSumVariant::kX2 ? Integer(-c) : c;
  }
  return {x, Rational(x, binomial(n + m, n))};
}

Rational xe_expectation_column(SignSumVariant variant, int n, int m) {
  const ParityClass pc = classify(n, m);
  const long j = pc.j;
  const long k = pc.k;
  const Integer base = double_factorial(2 * j - 1) * double_factorial(2 * k - 1);
  const Integer full = double_factorial(2 * j + 2 * k - 1);
  // Only the odd-n columns use (2j+2k-3)!!, and there j >= 1.
  auto short_den = [&] { return double_factorial(2 * j + 2 * k - 3); };
  if (pc.n_even && pc.m_even) {
    switch (variant) {
      case SignSumVariant::kX0: return Rational(2 * j * base, full);
      case SignSumVariant::kX1: return Rational(double_factorial(2 * j + 1) * double_factorial(2 * k - 1), full);
      case SignSumVariant::kX2: return Rational((2 * j + 2) * base, full);
    }
  } else if (pc.n_even) {
    return variant == SignSumVariant::kX1 ? Rational(base, full) : Rational(0);
  } else if (pc.m_even) {
    switch (variant) {
      case SignSumVariant::kX0: return Rational(base, short_den());
      case SignSumVariant::kX1: return Rational((2 * j + 2 * k) * base, full);
      case SignSumVariant::kX2: return Rational((2 * j + 2 * k + 1) * base, full);
    }
  }
  const Rational e(base, short_den());
  return variant == SignSumVariant::kX2 ? -e : e;
}

IdentitySides double_sum_identity(int k, int r) {
  if (k < 1 || r < 0) throw std::invalid_argument("double_sum_identity: need k >= 1 and r >= 0");
  Rational lhs;
  for (int p = 0; p <= 2 * k - 1; ++p) {
    std::vector<int> tuple{3};
    tuple.insert(tuple.end(), static_cast<std::size_t>(p), 1);
    tuple.push_back(2 * r + 1);
    tuple.insert(tuple.end(), static_cast<std::size_t>(2 * k - 1 - p), 1);
    lhs += q_eval(tuple);
  }
  const Rational rhs = Rational(3L * (2 * k + 2 * r + 3), 2L * k + 1) -
                       Rational(3 * double_factorial(2L * r + 3) * double_factorial(2L * k - 1),
                                double_factorial(2L * k + 2 * r + 1));
  return {lhs, rhs};
}

}  // namespace kcycles
