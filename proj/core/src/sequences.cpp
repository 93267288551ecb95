#include "kcycles/sequences.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kcycles {

Integer double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1, got " + std::to_string(n));
  Integer result = 1;
  if (n > 0) mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Integer stirling_first_signed(long n, long i) {
  if (n < 0 || i < 0) throw std::invalid_argument("stirling_first_signed: negative argument");
  if (i > n) throw std::invalid_argument("stirling_first_signed: i > n");
  // Row recurrence s(m+1, j) = s(m, j-1) - m s(m, j).
  std::vector<Integer> row{1};
  for (long m = 0; m < n; ++m) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j + 1] += row[j];
      next[j] -= m * row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

Integer stirling_second(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("stirling_second: negative argument");
  if (n > m) return 0;
  // S(j+1, i) = i S(j, i) + S(j, i-1).
  std::vector<Integer> row{1};
  for (long j = 0; j < m; ++j) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i + 1] += row[i];
      next[i] += static_cast<long>(i) * row[i];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

Integer pow_minus_two(long exponent) {
  if (exponent < 0) throw std::invalid_argument("pow_minus_two: negative exponent");
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  if (exponent % 2 == 1) result = -result;
  return result;
}

}  // namespace kcycles
