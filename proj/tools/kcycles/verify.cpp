#include "kcycles/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kcycles/closed_forms.hpp"
#include "kcycles/coefficients.hpp"
#include "kcycles/cyclic_shuffle.hpp"
#include "kcycles/increasing_tree.hpp"
#include "kcycles/sequences.hpp"
#include "kcycles/serialize.hpp"
#include "kcycles/sign_sums.hpp"
#include "kcycles/tree_poly.hpp"

namespace kcycles::cli {

namespace {

struct Outcome {
  bool passed;
  std::string lhs;
  std::string rhs;
};

template <class L, class R>
Outcome compare(const L& lhs, const R& rhs) {
  std::ostringstream l;
  std::ostringstream r;
  l << lhs;
  r << rhs;
  return {lhs == rhs, l.str(), r.str()};
}

// Aggregates many equalities; reports the first mismatch.
class Sweep {
 public:
  template <class L, class R>
  void expect(const std::string& where, const L& lhs, const R& rhs) {
    ++count_;
    if (failed_ || lhs == rhs) return;
    std::ostringstream l;
    std::ostringstream r;
    l << where << ": " << lhs;
    r << rhs;
    failed_ = true;
    lhs_ = l.str();
    rhs_ = r.str();
  }
  void expect_true(const std::string& where, bool ok) { expect(where, ok ? "true" : "false", std::string("true")); }

  Outcome outcome() const {
    if (failed_) return {false, lhs_, rhs_};
    return {true, std::to_string(count_) + " cases", std::to_string(count_) + " cases"};
  }

 private:
  bool failed_ = false;
  std::size_t count_ = 0;
  std::string lhs_;
  std::string rhs_;
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

MultiPoly x0_zero(const MultiPoly& p) { return poly_substitute(p, 0, MultiPoly(p.num_vars())); }

MultiPoly mono(std::size_t n, std::vector<std::uint16_t> e, long c) {
  e.resize(n, 0);
  return MultiPoly::monomial(std::move(e), c);
}

std::vector<std::vector<int>> odd_tuples(std::size_t length, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> grow = [&](int remaining) {
    if (current.size() == length) {
      out.push_back(current);
      return;
    }
    for (int v = 1; v <= remaining - static_cast<int>(length - current.size() - 1); v += 2) {
      current.push_back(v);
      grow(remaining - v);
      current.pop_back();
    }
  };
  grow(max_total);
  return out;
}

std::vector<Check> quick_checks() {
  std::vector<Check> checks;
  checks.push_back({"treepoly.T1", [] {
                      const MultiPoly expected = (MultiPoly::variable(3, 0) + MultiPoly::variable(3, 1)) *
                                                 MultiPoly::variable(3, 2);
                      return compare(reduced_tree_poly(1), expected);
                    }});
  checks.push_back({"treepoly.T2-at-x0=0", [] {
                      MultiPoly expected(5);
                      expected += mono(5, {0, 2, 1, 0, 1}, 1);
                      expected += mono(5, {0, 1, 2, 0, 1}, 1);
                      expected += mono(5, {0, 2, 0, 1, 1}, 2);
                      expected += mono(5, {0, 1, 1, 1, 1}, 5);
                      return compare(x0_zero(reduced_tree_poly(2)), expected);
                    }});
  checks.push_back({"treepoly.T3-terms", [] {
                      const MultiPoly t = x0_zero(reduced_tree_poly(3));
                      const Rational a = t.coefficient({0, 1, 1, 1, 1, 1, 1});
                      const Rational b = t.coefficient({0, 1, 1, 2, 1, 0, 1});
                      return compare(a.to_string() + "," + b.to_string(), std::string("61,5"));
                    }});
  checks.push_back({"coeff.single", [] {
                      return compare(a_single(1).to_string() + " " + b_single(2).to_string() + " " +
                                         a_single(3).to_string(),
                                     std::string("12 -1/120 1680"));
                    }});
  checks.push_back({"coeff.anchors", [] {
                      CoeffTable t;
                      std::ostringstream got;
                      got << t.b_lambda_n({1}) << " " << t.b_lambda_n({1, 1}) << " " << t.b_lambda_n({1, 1, 1})
                          << " " << t.b_lambda_n({1, 1, 1, 1}) << " " << t.b_lambda_mu({1, 1, 1}, {2, 1}) << " "
                          << t.b_lambda_mu({2, 1}, {2, 1}) << " " << t.b_lambda_n({2, 1});
                      return compare(got.str(),
                                     std::string("1/12 29/720 263/6720 23479/403200 29/2880 -1/1440 -19/3360"));
                    }});
  checks.push_back({"coeff.witten-111", [] {
                      CoeffTable t;
                      const auto w = t.witten_expansion({1, 1, 1});
                      std::ostringstream got;
                      for (const auto& [mu, v] : w) got << mu.key() << "=" << v << " ";
                      return compare(got.str(), std::string("1,1,1=288 2,1=4176 3=20736 "));
                    }});
  checks.push_back({"coeff.cup-1-1", [] {
                      CoeffTable t;
                      const auto m = t.cup_coeff({1}, {1});
                      std::ostringstream got;
                      for (const auto& [nu, v] : m) got << nu.key() << "=" << v << " ";
                      return compare(got.str(), std::string("1,1=2 2=29/5 "));
                    }});
  checks.push_back({"coeff.h-sequence", [] {
                      return compare(h_sequence(1).to_string() + " " + h_sequence(2).to_string() + " " +
                                         h_sequence(4).to_string(),
                                     std::string("1/3 29/90 23479/37800"));
                    }});
  checks.push_back({"coeff.closed-pairs", [] {
                      return compare(closed_b_pair(1, 1).to_string() + " " + closed_b_pair(2, 1).to_string(),
                                     std::string("29/720 -19/3360"));
                    }});
  checks.push_back({"tables.examples", [] {
                      std::ostringstream got;
                      got << shuffle_sign_sum_bruteforce(SignSumVariant::kX0, 2, 1) << " "
                          << shuffle_sign_sum_bruteforce(SignSumVariant::kX0, 2, 2) << " "
                          << shuffle_sign_sum_bruteforce(SignSumVariant::kX2, 1, 1);
                      return compare(got.str(), std::string("0 4 -2"));
                    }});
  checks.push_back({"tables.counting-examples", [] {
                      std::ostringstream got;
                      got << counting_lemma_bruteforce(3, 1) << " " << counting_lemma_bruteforce(5, 2) << " "
                          << counting_lemma_bruteforce(4, 3);
                      return compare(got.str(), std::string("1 5 -16"));
                    }});
  checks.push_back({"tables.even-cycles-4", [] {
                      std::ostringstream got;
                      for (const auto& v : even_cycle_histogram(4)) got << v << " ";
                      return compare(got.str(), std::string("9 12 3 "));
                    }});
  checks.push_back({"shuffles.T1-closed", [] {
                      Sweep s;
                      for (const auto& t : odd_tuples(3, 9)) {
                        s.expect("T1", tree_poly_bruteforce(t), Integer(t[0] * (t[0] + t[1]) * t[2]));
                      }
                      return s.outcome();
                    }});
  checks.push_back({"degenerate.pure-zero", [] {
                      CoeffTable t;
                      Sweep s;
                      for (int m = 0; m <= 4; ++m) {
                        for (int n = 0; n <= m; ++n) {
                          s.expect("b_{0^" + std::to_string(m) + "}^{0^" + std::to_string(n) + "}",
                                   degenerate_b(t, Partition(), m, Partition(), n),
                                   Rational(factorial(n) * stirling_second(m, n), pow_minus_two(m)));
                        }
                      }
                      return s.outcome();
                    }});
  return checks;
}

std::vector<Check> full_checks(const Context& ctx) {
  std::vector<Check> checks;
  checks.push_back({"oracle.trees-vs-recursion", [ctx] {
                      Sweep s;
                      EnumCaps caps = ctx.caps;
                      caps.max_tree_k = std::max(caps.max_tree_k, 5);
                      for (int k = 0; k <= 5; ++k) {
                        s.expect_true("k=" + std::to_string(k), reduced_tree_poly_bruteforce(k, caps) == reduced_tree_poly(k));
                      }
                      return s.outcome();
                    }});
  checks.push_back({"oracle.shuffles-vs-treepoly", [ctx] {
                      Sweep s;
                      for (int k = 0; k <= 2; ++k) {
                        const MultiPoly t = tree_poly(k);
                        for (const auto& tuple : odd_tuples(2 * static_cast<std::size_t>(k) + 1, 9)) {
                          std::vector<Rational> point(tuple.begin(), tuple.end());
                          s.expect("tuple", Rational(tree_poly_bruteforce(tuple, ctx.caps)), poly_eval(t, point));
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"closed.t-and-q-ones", [] {
                      Sweep s;
                      for (int k = 0; k <= 5; ++k) {
                        const MultiPoly t = tree_poly(k);
                        for (int n = 1; n <= 9; n += 2) {
                          std::vector<int> tuple(2 * static_cast<std::size_t>(k) + 1, 1);
                          tuple[0] = n;
                          s.expect("Q", q_eval(tuple), q_closed_ones(k, n));
                          for (int m = 1; m <= 9; m += 2) {
                            if (k == 0 && m != n) continue;
                            tuple.back() = k == 0 ? n : m;
                            std::vector<Rational> point(tuple.begin(), tuple.end());
                            s.expect("T", poly_eval(t, point), Rational(t_closed_ones(k, n, m)));
                          }
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"closed.t-main-and-double-sum", [] {
                      Sweep s;
                      for (int k = 1; k <= 4; ++k) {
                        const MultiPoly t = tree_poly(k);
                        for (int r = 0; r <= 4; ++r) {
                          for (int p = 0; p <= 2 * k - 1; ++p) {
                            std::vector<Rational> point{Rational(3)};
                            point.insert(point.end(), static_cast<std::size_t>(p), Rational(1));
                            point.emplace_back(2 * r + 1);
                            point.insert(point.end(), static_cast<std::size_t>(2 * k - 1 - p), Rational(1));
                            s.expect("T main", poly_eval(t, point), Rational(t_closed_main(k, p, 2 * k - 1 - p, r)));
                          }
                          const IdentitySides sides = double_sum_identity(k, r);
                          s.expect("double sum", sides.lhs, sides.rhs);
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"closed.pairs-vs-recursion", [] {
                      CoeffTable t;
                      Sweep s;
                      for (int r = 1; r <= 7; ++r) {
                        for (int k = 1; r + k <= 8; ++k) {
                          s.expect("b pair", t.b_lambda_n({r, k}), closed_b_pair(r, k));
                          s.expect("a pair", t.a_lambda_mu({r, k}, {r + k}), closed_a_pair(r, k));
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"structure.reduced-treepoly", [] {
                      Sweep s;
                      for (int k = 0; k <= 6; ++k) {
                        const MultiPoly t = reduced_tree_poly(k);
                        const std::size_t n = t.num_vars();
                        s.expect_true("homogeneous", t.is_homogeneous() && t.total_degree() == 2 * k);
                        Rational sum;
                        bool nonnegative_integers = true;
                        for (const auto& [e, c] : t.terms()) {
                          sum += c;
                          nonnegative_integers = nonnegative_integers && c.is_integer() && c.sign() > 0;
                        }
                        s.expect_true("integer coefficients", nonnegative_integers);
                        s.expect("coefficient sum", sum, Rational(factorial(2L * k)));
                        if (k >= 1) {
                          const MultiPoly collapsed =
                              poly_substitute(x0_zero(t), 1, MultiPoly::variable_sum(n, 0, 1));
                          s.expect_true("x0+x1", collapsed == t);
                        }
                        s.expect_true("linear in last", t.degree_in(n - 1) == (k == 0 ? 0 : 1));
                      }
                      return s.outcome();
                    }});
  checks.push_back({"structure.l-at-ones", [] {
                      Sweep s;
                      for (int k = 0; k <= 4; ++k) {
                        const std::vector<Rational> ones(2 * static_cast<std::size_t>(k) + 1, Rational(1));
                        for (int n = 0; n <= 3; ++n) {
                          Integer power;
                          mpz_ui_pow_ui(power.get_mpz_t(), 2UL * k + 1, 2UL * n);
                          s.expect("L", poly_eval(l_poly(k, n), ones), Rational(factorial(2L * k) * power));
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"structure.g-recursion", [] {
                      Sweep s;
                      for (int k = 0; k <= 2; ++k) s.expect_true("k=" + std::to_string(k), verify_g_recursion(k, 6));
                      return s.outcome();
                    }});
  checks.push_back({"coeff.matrix-duality", [] {
                      CoeffTable t;
                      Sweep s;
                      for (int n = 1; n <= 6; ++n) {
                        s.expect_true("B*A", (t.b_matrix(n) * t.a_matrix(n)).is_identity());
                        const CoeffMatrix a = t.a_matrix(n);
                        for (const Partition& p : a.order) {
                          std::map<int, int> mult;
                          for (int part : p.parts()) ++mult[part];
                          Rational expected(1);
                          for (const auto& [part, count] : mult) {
                            expected *= a_single(part).pow(static_cast<unsigned>(count)) *
                                        Rational(Integer(1), factorial(count));
                          }
                          s.expect("diagonal " + p.key(), a.at(p, p), expected);
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"coeff.peel-order", [] {
                      CoeffTable t;
                      Sweep s;
                      for (int w = 1; w <= 7; ++w) {
                        for (const Partition& p : partitions_of(w)) {
                          std::vector<int> seq(p.parts().rbegin(), p.parts().rend());
                          const Rational expected = t.b_lambda_n(p);
                          do {
                            s.expect("peel " + p.key(), t.b_lambda_n_peeled(seq), expected);
                          } while (std::next_permutation(seq.begin(), seq.end()));
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"tables.sign-sums", [ctx] {
                      Sweep s;
                      for (auto v : {SignSumVariant::kX0, SignSumVariant::kX1, SignSumVariant::kX2}) {
                        for (int n = 0; n <= 10; ++n) {
                          for (int m = 0; n + m <= 10; ++m) {
                            const XeValue closed = xe_tables(v, n, m);
                            s.expect(std::string(to_string(v)), shuffle_sign_sum_bruteforce(v, n, m, ctx.caps), closed.x);
                            s.expect("E column", closed.e, xe_expectation_column(v, n, m));
                          }
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"tables.counting", [ctx] {
                      Sweep s;
                      for (int n = 1; n <= 6; ++n) {
                        for (int sz = 0; sz <= 4; ++sz) {
                          s.expect("counting", counting_lemma_bruteforce(n, sz, ctx.caps), counting_lemma_closed(n, sz));
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"tables.even-cycles", [ctx] {
                      Sweep s;
                      for (int k = 1; k <= 4; ++k) {
                        // (2k-1)!! (x+1)(x+3)...(x+2k-1), lowest degree first.
                        std::vector<Integer> poly{double_factorial(2L * k - 1)};
                        for (int i = 1; i <= 2 * k - 1; i += 2) {
                          std::vector<Integer> next(poly.size() + 1, 0);
                          for (std::size_t d = 0; d < poly.size(); ++d) {
                            next[d] += poly[d] * i;
                            next[d + 1] += poly[d];
                          }
                          poly = std::move(next);
                        }
                        s.expect_true("k=" + std::to_string(k), even_cycle_histogram(2 * k, ctx.caps) == poly);
                      }
                      return s.outcome();
                    }});
  checks.push_back({"degenerate.padded-inverse", [] {
                      CoeffTable t;
                      Sweep s;
                      for (int w = 0; w <= 3; ++w) {
                        std::vector<std::pair<Partition, int>> basis;
                        for (const Partition& p : partitions_of(w)) {
                          for (int z = 0; z <= 3; ++z) {
                            if (!p.empty() || z > 0) basis.emplace_back(p, z);
                          }
                        }
                        for (const auto& [lp, lz] : basis) {
                          for (const auto& [rp, rz] : basis) {
                            Rational sum;
                            for (const auto& [mp, mz] : basis) {
                              if (mz > lz || rz > mz) continue;
                              sum += degenerate_b(t, lp, lz, mp, mz) * degenerate_a(t, mp, mz, rp, rz);
                            }
                            s.expect("BA", sum, Rational(lp == rp && lz == rz ? 1 : 0));
                          }
                        }
                      }
                      return s.outcome();
                    }});
  checks.push_back({"degenerate.stirling-duality", [] {
                      Sweep s;
                      for (int n = 0; n <= 10; ++n) {
                        for (int k = 0; k <= n; ++k) {
                          Integer sum = 0;
                          for (int j = k; j <= n; ++j) sum += stirling_second(n, j) * stirling_first_signed(j, k);
                          s.expect("S2*S1", sum, Integer(n == k ? 1 : 0));
                        }
                      }
                      return s.outcome();
                    }});
  return checks;
}

Check cache_check(const ResultCache::Entry& entry) {
  return {"cache." + entry.path.filename().string(), [entry] {
            if (!entry.readable) return Outcome{false, "unreadable entry", "valid cache document"};
            Context fresh;
            nlohmann::json recomputed;
            if (entry.op == "treepoly") {
              recomputed = treepoly_result(entry.params.at("k").get<int>(),
                                           entry.params.at("variant").get<std::string>(),
                                           parse_route(entry.params.at("route").get<std::string>()), fresh);
            } else if (entry.op == "table") {
              recomputed = table_result(entry.params.at("weight").get<int>(), fresh);
            } else {
              return Outcome{false, "unknown operation " + entry.op, "treepoly or table"};
            }
            if (ResultCache::key(entry.op, entry.params) + ".json" != entry.path.filename().string()) {
              return Outcome{false, "entry stored under a foreign key", entry.path.filename().string()};
            }
            return Outcome{recomputed == entry.result, recomputed == entry.result ? "cached = recomputed" : "cached",
                           recomputed == entry.result ? "cached = recomputed" : "recomputed differs"};
          }};
}

}  // namespace

VerifyLevel parse_verify_level(const std::string& name) {
  if (name == "quick") return VerifyLevel::kQuick;
  if (name == "full") return VerifyLevel::kFull;
  throw std::invalid_argument("unknown verify level '" + name + "' (expected quick or full)");
}

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerifyReport::print(std::ostream& out, bool timings) const {
  std::size_t failures = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      ++failures;
      out << ": " << c.lhs << " != " << c.rhs;
    }
    if (timings) out << " (" << std::fixed << std::setprecision(3) << c.seconds << "s)";
    out << '\n';
  }
  out << checks.size() << " checks, " << failures << " failed\n";
}

VerifyReport run_verify(VerifyLevel level, const Context& ctx) {
  std::vector<Check> checks = quick_checks();
  if (level == VerifyLevel::kFull) {
    for (auto& c : full_checks(ctx)) checks.push_back(std::move(c));
  }
  for (const auto& entry : ctx.cache.entries()) checks.push_back(cache_check(entry));

  VerifyReport report;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result{check.name, false, {}, {}, 0};
    try {
      Outcome o = check.run();
      result.passed = o.passed;
      result.lhs = std::move(o.lhs);
      result.rhs = std::move(o.rhs);
    } catch (const std::exception& e) {
      result.lhs = std::string("exception: ") + e.what();
      result.rhs = "no exception";
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace kcycles::cli
