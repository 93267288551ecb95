#pragma once

#include "kcycles/rational.hpp"

namespace kcycles {

// n!! for n >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(long n);

Integer factorial(long n);

// Generalized binomial coefficient C(n, k) for any integer n and k >= 0,
// i.e. n(n-1)...(n-k+1)/k!. Returns 0 for k < 0.
Integer binomial(long n, long k);

// Signed Stirling numbers of the first kind: sum_i s(n,i) v^i = v(v-1)...(v-n+1).
Integer stirling_first_signed(long n, long i);

// Stirling numbers of the second kind; zero when n > m.
Integer stirling_second(long m, long n);

// (-2)^exponent for exponent >= 0.
Integer pow_minus_two(long exponent);

}  // namespace kcycles
