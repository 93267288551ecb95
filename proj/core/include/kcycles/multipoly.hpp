#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kcycles/rational.hpp"

namespace kcycles {

using Exponents = std::vector<std::uint16_t>;

// Sparse polynomial in x_0..x_{N} with exact rational coefficients.
//
// The variable count is fixed at construction and every operation between
// two polynomials requires equal counts (ShapeMismatch otherwise). Terms with
// zero coefficient are never stored, so equality of the term maps is
// equality of polynomials.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& value);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  // Sum of the variables x_first..x_last (inclusive).
  static MultiPoly variable_sum(std::size_t num_vars, std::size_t first, std::size_t last);
  static MultiPoly monomial(Exponents exponents, const Rational& coefficient);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds `coefficient * x^exponents`, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const Rational& coefficient);
  Rational coefficient(const Exponents& exponents) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Highest power of `var` appearing; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_arity(const MultiPoly& other, const char* op) const;

  std::size_t num_vars_;
  TermMap terms_;
};

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

// Replaces x_var by `replacement` and re-expands.
MultiPoly poly_substitute(const MultiPoly& p, std::size_t var, const MultiPoly& replacement);

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point);

// Re-reads `p` as a polynomial in `num_vars` >= p.num_vars() variables.
MultiPoly poly_embed(const MultiPoly& p, std::size_t num_vars);

// Plain-text rendering such as "2*x0^2*x3 - 1/3*x1". Terms are in graded
// lexicographic order (higher degree first, then larger x0 exponent first).
// `names` overrides the default variable names x0, x1, ...; a name
// containing '+' is parenthesized when raised to a power.
std::string to_text(const MultiPoly& p, const std::vector<std::string>& names = {});
// LaTeX rendering in the same order, e.g. "2 x_{0}^{2} x_{3} - \frac{1}{3} x_{1}".
std::string to_latex(const MultiPoly& p, const std::vector<std::string>& names = {});

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace kcycles
