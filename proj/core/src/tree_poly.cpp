#include "kcycles/tree_poly.hpp"

#include <cstdint>
#include <mutex>
#include <utility>
#include <stdexcept>
#include <string>

#include <absl/container/flat_hash_map.h>

#include "kcycles/errors.hpp"

namespace kcycles {

OddTuple::OddTuple(std::vector<int> values) : values_(std::move(values)) {
  if (values_.size() % 2 == 0) throw std::invalid_argument("odd tuple needs an odd number of entries");
  for (int v : values_) {
    if (v < 1 || v % 2 == 0) {
      throw std::invalid_argument("odd tuple entries must be positive odd integers, got " + std::to_string(v));
    }
  }
}

MultiPoly PFamily::at(int c) const {
  if (c < 0) c = -c;
  auto it = polys.find(c);
  if (it == polys.end()) return MultiPoly(2 * static_cast<std::size_t>(k) + 1);
  return it->second;
}

namespace {

bool is_zero_value(const Rational& r) { return r.is_zero(); }

// The level-k coefficients of the P recursion, generic over the value type
// so the same code builds polynomials and evaluates at a point:
//   P_{k+1}^c = P_k^c same(c) + P_k^{c-2} lower(c) + P_k^{c+2} upper(c).
template <class Value>
struct StepMultipliers {
  Value y12;
  Value cross;
  Value z_low_high;
  Value stay;

  template <class Z>
  StepMultipliers(int k, const Z& z, const Value& y1, const Value& y2)
      : y12(y1 * y2),
        cross(z(2 * k + 1) * (y1 + y2)),
        z_low_high(z(2 * k) * z(2 * k + 2)),
        stay(z(2 * k) * (z(2 * k + 1) - y2) * Rational(-2)) {}

  Value same(long c) const { return y12 * Rational(2 * c * c) + stay; }
  Value lower(long c) const { return y12 * Rational((c - 2) * (c - 2)) + cross * Rational(c - 2) + z_low_high; }
  Value upper(long c) const { return y12 * Rational((c + 2) * (c + 2)) - cross * Rational(c + 2) + z_low_high; }
};

// One step of the recursion; `at(c)` returns P_k^c (zero when absent).
template <class Value, class At, class Z>
std::map<int, Value> p_step(int k, const At& at, const Z& z, const Value& y1, const Value& y2,
                            const Value& zero) {
  const StepMultipliers<Value> mult(k, z, y1, y2);
  std::map<int, Value> next;
  for (int c = 1; c <= 2 * k + 3; c += 2) {
    Value total = zero;
    if (const Value& v = at(c); !is_zero_value(v)) total += v * mult.same(c);
    if (const Value& v = at(c - 2); !is_zero_value(v)) total += v * mult.lower(c);
    if (const Value& v = at(c + 2); !is_zero_value(v)) total += v * mult.upper(c);
    next.emplace(c, std::move(total));
  }
  return next;
}

// Integer polynomials with exponents packed four bits per variable, used to
// build the P family. Valid while every exponent stays below 16 and there are
// at most 16 variables, which holds through k = 7; coefficients of P_7 need
// about 41 bits, so 64-bit arithmetic (overflow-checked) suffices.
using PackedPoly = absl::flat_hash_map<std::uint64_t, std::int64_t>;
using PackedFamily = std::map<int, PackedPoly>;
constexpr int kMaxPackedK = 7;

std::uint64_t pack_exponents(const Exponents& e) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < e.size(); ++i) key |= static_cast<std::uint64_t>(e[i]) << (4 * i);
  return key;
}

Exponents unpack_exponents(std::uint64_t key, std::size_t num_vars) {
  Exponents e(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) e[i] = static_cast<std::uint16_t>((key >> (4 * i)) & 0xF);
  return e;
}

// out += a * m, where m has small integer coefficients.
void add_product(PackedPoly& out, const PackedPoly& a, const MultiPoly& m) {
  std::vector<std::pair<std::uint64_t, std::int64_t>> small;
  for (const auto& [e, c] : m.terms()) {
    if (!c.is_integer() || !c.numerator().fits_slong_p()) {
      throw InternalInconsistency("P recursion multiplier outside the packed range");
    }
    small.emplace_back(pack_exponents(e), c.numerator().get_si());
  }
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : small) {
      std::int64_t product = 0;
      std::int64_t& slot = out[ka + kb];
      if (__builtin_mul_overflow(ca, cb, &product) || __builtin_add_overflow(slot, product, &slot)) {
        throw InternalInconsistency("P recursion coefficient overflow");
      }
    }
  }
}

std::mutex& family_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::shared_ptr<const PackedFamily>>& packed_levels() {
  static std::vector<std::shared_ptr<const PackedFamily>> levels;
  return levels;
}

std::map<int, std::shared_ptr<const PFamily>>& family_cache() {
  static std::map<int, std::shared_ptr<const PFamily>> cache;
  return cache;
}

std::shared_ptr<const PackedFamily> next_packed(int k, const PackedFamily& current) {
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 3;
  std::vector<MultiPoly> z;
  for (std::size_t j = 0; j < n; ++j) z.push_back(MultiPoly::variable_sum(n, 0, j));
  auto zf = [&](int j) -> const MultiPoly& { return z[static_cast<std::size_t>(j)]; };
  const StepMultipliers<MultiPoly> mult(k, zf, MultiPoly::variable(n, n - 2), MultiPoly::variable(n, n - 1));

  // Packed keys stay valid under the embedding into more variables, since the
  // new variables only occupy higher (zero) nibbles.
  auto next = std::make_shared<PackedFamily>();
  for (int c = 1; c <= 2 * k + 3; c += 2) {
    PackedPoly total;
    auto contribute = [&](int source, const MultiPoly& m) {
      auto it = current.find(source < 0 ? -source : source);
      if (it != current.end()) add_product(total, it->second, m);
    };
    contribute(c, mult.same(c));
    contribute(c - 2, mult.lower(c));
    contribute(c + 2, mult.upper(c));
    absl::erase_if(total, [](const auto& term) { return term.second == 0; });
    next->emplace(c, std::move(total));
  }
  return next;
}

// Caller holds family_mutex().
std::shared_ptr<const PackedFamily> packed_family_locked(int k) {
  if (k < 0) throw std::invalid_argument("P family: k must be >= 0");
  if (k > kMaxPackedK) {
    throw std::out_of_range("P family supports k <= " + std::to_string(kMaxPackedK) + ", got " + std::to_string(k));
  }
  auto& levels = packed_levels();
  if (levels.empty()) {
    auto base = std::make_shared<PackedFamily>();
    (*base)[1].emplace(0, 1);
    levels.push_back(std::move(base));
  }
  while (static_cast<int>(levels.size()) <= k) {
    const int level = static_cast<int>(levels.size()) - 1;
    levels.push_back(next_packed(level, *levels.back()));
  }
  return levels[static_cast<std::size_t>(k)];
}

}  // namespace

std::shared_ptr<const PFamily> p_family(int k) {
  std::lock_guard<std::mutex> lock(family_mutex());
  auto& cache = family_cache();
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  const auto packed = packed_family_locked(k);
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
  auto family = std::make_shared<PFamily>();
  family->k = k;
  for (const auto& [c, poly] : *packed) {
    MultiPoly p(n);
    for (const auto& [key, coeff] : poly) p.add_term(unpack_exponents(key, n), Rational(static_cast<long>(coeff)));
    family->polys.emplace(c, std::move(p));
  }
  cache.emplace(k, family);
  return family;
}

MultiPoly l_poly(int k, int n) {
  if (n < 0) throw std::invalid_argument("l_poly: n must be >= 0");
  std::shared_ptr<const PackedFamily> packed;
  {
    std::lock_guard<std::mutex> lock(family_mutex());
    packed = packed_family_locked(k);
  }
  absl::flat_hash_map<std::uint64_t, Integer> total;
  for (const auto& [c, poly] : *packed) {
    Integer weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(c), 2UL * static_cast<unsigned long>(n));
    for (const auto& [key, coeff] : poly) {
      Integer& slot = total[key];
      if (coeff >= 0) {
        mpz_addmul_ui(slot.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(coeff));
      } else {
        mpz_submul_ui(slot.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(-coeff));
      }
    }
  }
  Integer four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4UL, static_cast<unsigned long>(k));
  const std::size_t num_vars = 2 * static_cast<std::size_t>(k) + 1;
  MultiPoly result(num_vars);
  for (const auto& [key, coeff] : total) {
    if (coeff != 0) result.add_term(unpack_exponents(key, num_vars), Rational(coeff, four_k));
  }
  return result;
}

MultiPoly reduced_tree_poly(int k) { return l_poly(k, 0); }

MultiPoly tree_poly(int k) {
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
  return MultiPoly::variable(n, 0) * reduced_tree_poly(k);
}

Rational q_eval(const OddTuple& tuple) {
  const std::vector<int>& v = tuple.values();
  const int k = tuple.k();
  if (k == 0) return Rational(v[0]);

  // Run the P recursion on numbers instead of polynomials.
  std::vector<Rational> z;
  long running = 0;
  for (int value : v) {
    running += value;
    z.emplace_back(running);
  }
  auto zf = [&](int j) -> const Rational& { return z[static_cast<std::size_t>(j)]; };
  const Rational zero;
  std::map<int, Rational> level{{1, Rational(1)}};
  for (int step = 0; step < k; ++step) {
    auto at = [&](int c) -> const Rational& {
      auto it = level.find(c < 0 ? -c : c);
      return it == level.end() ? zero : it->second;
    };
    level = p_step<Rational>(step, at, zf, Rational(v[2 * step + 1]), Rational(v[2 * step + 2]), zero);
  }
  Rational reduced;
  for (const auto& [c, value] : level) reduced += value;
  Integer denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 4UL, static_cast<unsigned long>(k));
  for (int j = 1; j <= 2 * k - 1; ++j) denominator *= z[static_cast<std::size_t>(j)].numerator();
  return reduced / Rational(denominator);
}

Rational q_eval(const std::vector<int>& tuple) { return q_eval(OddTuple(tuple)); }

TruncatedSeries g_series(int k, std::size_t order, std::size_t num_vars) {
  const std::size_t own = 2 * static_cast<std::size_t>(k) + 1;
  if (num_vars < own) throw ShapeMismatch("g_series: need at least 2k+1 variables");
  TruncatedSeries g(order, num_vars);
  Integer fact = 1;
  for (std::size_t m = 0; m <= order; m += 2) {
    if (m > 0) fact *= Integer(static_cast<unsigned long>(m * (m - 1)));
    g.set(m, poly_embed(l_poly(k, static_cast<int>(m / 2)), num_vars) * Rational(Integer(1), fact));
  }
  return g;
}

bool verify_g_recursion(int k, std::size_t order) {
  if (k < 0) throw std::invalid_argument("verify_g_recursion: k must be >= 0");
  if (order < 2) throw std::invalid_argument("verify_g_recursion: order must be >= 2");
  const std::size_t n = 2 * static_cast<std::size_t>(k) + 3;
  // g_k'' at t^order needs g_k through t^(order+2).
  const TruncatedSeries g = g_series(k, order + 2, n);
  const TruncatedSeries g1 = g.derivative();
  const TruncatedSeries g2 = g1.derivative();

  const MultiPoly z_low = MultiPoly::variable_sum(n, 0, n - 3);
  const MultiPoly z_mid = MultiPoly::variable_sum(n, 0, n - 2);
  const MultiPoly z_high = MultiPoly::variable_sum(n, 0, n - 1);
  const MultiPoly y1 = MultiPoly::variable(n, n - 2);
  const MultiPoly y2 = MultiPoly::variable(n, n - 1);

  const TruncatedSeries sinh2 = series_elementary(Elementary::kSinhSquared, order, n);
  const TruncatedSeries sinh_cosh = series_elementary(Elementary::kSinhCosh, order, n);
  const TruncatedSeries cosh2 = series_elementary(Elementary::kCoshSquared, order, n);

  TruncatedSeries shifted_sinh2 = sinh2 * (z_low * z_high);
  TruncatedSeries constant_part(order, n);
  constant_part.set(0, z_low * y2);
  const TruncatedSeries first_factor = shifted_sinh2 + constant_part;

  TruncatedSeries rhs = g.truncated(order) * first_factor;
  rhs += g1.truncated(order) * (sinh_cosh * (z_mid * (y1 + y2)));
  rhs += g2.truncated(order) * (cosh2 * (y1 * y2));

  return rhs == g_series(k + 1, order, n);
}

}  // namespace kcycles
