#include "kcycles/sign_sums.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kcycles/errors.hpp"
#include "kcycles/sequences.hpp"

namespace kcycles {

namespace {

bool odd_inversions(const std::vector<int>& values) {
  bool odd = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) odd = !odd;
    }
  }
  return odd;
}

// Letters are encoded by canonical rank: the a-letters first in index order,
// then b_1..b_m.
Integer sign_sum_of_word(const std::vector<int>& word, int a_count, int m) {
  const bool orientation_odd = odd_inversions(word);
  std::vector<int> position(word.size());
  for (std::size_t p = 0; p < word.size(); ++p) position[static_cast<std::size_t>(word[p])] = static_cast<int>(p);

  long total = 0;
  std::vector<int> chosen(static_cast<std::size_t>(m) + 1);
  for (int a = 0; a < a_count; ++a) {
    chosen[0] = position[static_cast<std::size_t>(a)];
    for (int b = 0; b < m; ++b) chosen[static_cast<std::size_t>(b) + 1] = position[static_cast<std::size_t>(a_count + b)];
    total += odd_inversions(chosen) ? -1 : 1;
  }
  return Integer(orientation_odd ? -total : total);
}

}  // namespace

SignSumVariant parse_sign_sum_variant(std::string_view name) {
  if (name == "X0") return SignSumVariant::kX0;
  if (name == "X1") return SignSumVariant::kX1;
  if (name == "X2") return SignSumVariant::kX2;
  throw std::invalid_argument("unknown sign-sum variant '" + std::string(name) + "' (expected X0, X1 or X2)");
}

std::string_view to_string(SignSumVariant variant) {
  switch (variant) {
    case SignSumVariant::kX0:
      return "X0";
    case SignSumVariant::kX1:
      return "X1";
    case SignSumVariant::kX2:
      return "X2";
  }
  return "X?";
}

Integer shuffle_sign_sum_bruteforce(SignSumVariant variant, int n, int m, const EnumCaps& caps) {
  if (n < 0 || m < 0) throw std::invalid_argument("sign sum: n and m must be >= 0");
  if (n + m > caps.max_shuffle_letters) throw CapExceeded("shuffle", caps.max_shuffle_letters, n + m);

  const bool leading = variant != SignSumVariant::kX0;
  const bool trailing = variant == SignSumVariant::kX2;
  const int a_count = n + (leading ? 1 : 0) + (trailing ? 1 : 0);
  // Canonical ranks of the shuffled a's and of the fixed ends.
  const int first_a = leading ? 1 : 0;
  const int last_a = a_count - 1;

  Integer total = 0;
  std::vector<int> word;
  // Bit p of `mask` set means position p of the shuffled part holds a b.
  const unsigned width = static_cast<unsigned>(n + m);
  for (unsigned long mask = 0; mask < (1UL << width); ++mask) {
    if (__builtin_popcountl(mask) != m) continue;
    word.clear();
    if (leading) word.push_back(0);
    int next_a = first_a;
    int next_b = 0;
    for (unsigned p = 0; p < width; ++p) {
      if ((mask >> p) & 1UL) {
        word.push_back(a_count + next_b++);
      } else {
        word.push_back(next_a++);
      }
    }
    if (trailing) word.push_back(last_a);
    total += sign_sum_of_word(word, a_count, m);
  }
  return total;
}

Integer counting_lemma_bruteforce(int n, int s, const EnumCaps& caps) {
  if (n < 1 || s < 0) throw std::invalid_argument("counting lemma: need n >= 1 and s >= 0");
  std::int64_t points = 1;
  for (int i = 0; i < s; ++i) {
    if (points > caps.max_counting_points / n + 1) {
      points = caps.max_counting_points + 1;
      break;
    }
    points *= n;
  }
  if (points > caps.max_counting_points) throw CapExceeded("counting", caps.max_counting_points, points);

  std::vector<int> z(static_cast<std::size_t>(s), 1);
  long total = 0;
  while (true) {
    int sign_sum = 0;
    long a = 0;
    for (int j = 1; j <= n; ++j) {
      int hits = 0;
      for (int zi : z) hits += j <= zi ? 1 : 0;
      if (hits % 2 == 1) ++a;
    }
    for (int zi : z) sign_sum += zi;
    const long b = n - a;
    total += (sign_sum % 2 == 0 ? 1 : -1) * (b - a);

    std::size_t i = z.size();
    while (i-- > 0) {
      if (++z[i] <= n) break;
      z[i] = 1;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return Integer(total);
}

Integer counting_lemma_closed(int n, int s) {
  if (n < 1 || s < 0) throw std::invalid_argument("counting lemma: need n >= 1 and s >= 0");
  // With s = 0 the single empty sequence contributes B - A = n for every n.
  if (s == 0) return Integer(n);
  if (n % 2 == 1) return Integer(s % 2 == 1 ? 1 : n);
  return Integer(n / 2) * pow_minus_two(s);
}

std::vector<Integer> even_cycle_histogram(int two_k, const EnumCaps& caps) {
  if (two_k < 0 || two_k % 2 != 0) throw std::invalid_argument("even_cycle_histogram: need an even size >= 0");
  if (two_k > caps.max_permutation_size) throw CapExceeded("perm", caps.max_permutation_size, two_k);

  std::vector<Integer> histogram(static_cast<std::size_t>(two_k / 2) + 1, 0);
  std::vector<int> perm(static_cast<std::size_t>(two_k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(perm.size());
  do {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t even_cycles = 0;
    for (std::size_t start = 0; start < perm.size(); ++start) {
      if (seen[start]) continue;
      std::size_t length = 0;
      for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(perm[v])) {
        seen[v] = 1;
        ++length;
      }
      if (length % 2 == 0) ++even_cycles;
    }
    ++histogram[even_cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return histogram;
}

}  // namespace kcycles
