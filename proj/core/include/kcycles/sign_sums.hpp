#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kcycles/caps.hpp"
#include "kcycles/rational.hpp"

namespace kcycles {

// Shuffle families for the oriented sign sum tables:
//   X0: a_1..a_n shuffled with b_1..b_m, summing over a_1..a_n;
//   X1: as X0 with an extra a_0 fixed first, summing over a_0..a_n;
//   X2: a_0 fixed first and a_{n+1} fixed last, summing over a_0..a_{n+1}.
enum class SignSumVariant { kX0, kX1, kX2 };

SignSumVariant parse_sign_sum_variant(std::string_view name);
std::string_view to_string(SignSumVariant variant);

Integer shuffle_sign_sum_bruteforce(SignSumVariant variant, int n, int m,
                                    const EnumCaps& caps = EnumCaps::defaults());

// Sum over z in {1..n}^s of (-1)^{z_1+..+z_s} (B(z) - A(z)).
Integer counting_lemma_bruteforce(int n, int s, const EnumCaps& caps = EnumCaps::defaults());
Integer counting_lemma_closed(int n, int s);

// p_i = number of permutations of {1..two_k} with exactly i even-length cycles.
std::vector<Integer> even_cycle_histogram(int two_k, const EnumCaps& caps = EnumCaps::defaults());

}  // namespace kcycles
