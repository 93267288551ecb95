#include "kcycles/series.hpp"

#include <string>

#include "kcycles/errors.hpp"
#include "kcycles/sequences.hpp"

namespace kcycles {

TruncatedSeries::TruncatedSeries(std::size_t order, std::size_t num_vars)
    : num_vars_(num_vars), coefficients_(order + 1, MultiPoly(num_vars)) {}

TruncatedSeries::TruncatedSeries(std::vector<MultiPoly> coefficients)
    : num_vars_(coefficients.empty() ? 0 : coefficients.front().num_vars()),
      coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ShapeMismatch("series needs at least one coefficient");
  for (const auto& c : coefficients_) {
    if (c.num_vars() != num_vars_) throw ShapeMismatch("series coefficients differ in arity");
  }
}

void TruncatedSeries::set(std::size_t n, MultiPoly coefficient) {
  if (coefficient.num_vars() != num_vars_) throw ShapeMismatch("series coefficient arity differs");
  coefficients_.at(n) = std::move(coefficient);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other, const char* op) const {
  if (num_vars_ != other.num_vars_ || order() != other.order()) {
    throw ShapeMismatch(std::string(op) + ": series differ in order or arity");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other, "add");
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] += other.coefficients_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const MultiPoly& scalar) {
  for (auto& c : coefficients_) {
    if (!c.is_zero()) c *= scalar;
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "multiply");
  TruncatedSeries out(a.order(), a.num_vars());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) {
      if (b.coefficients_[j].is_zero()) continue;
      out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  // Differentiating loses the top coefficient.
  TruncatedSeries out(order() == 0 ? 0 : order() - 1, num_vars_);
  for (std::size_t n = 1; n < coefficients_.size(); ++n) {
    out.coefficients_[n - 1] = coefficients_[n] * Rational(static_cast<long>(n));
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  TruncatedSeries out(new_order, num_vars_);
  for (std::size_t n = 0; n <= new_order && n < coefficients_.size(); ++n) {
    out.coefficients_[n] = coefficients_[n];
  }
  return out;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  return op == SeriesOp::kAdd ? a + b : a * b;
}

TruncatedSeries series_elementary(Elementary kind, std::size_t order, std::size_t num_vars) {
  TruncatedSeries out(order, num_vars);
  for (std::size_t n = 0; n <= order; ++n) {
    const bool even = n % 2 == 0;
    const Rational inv_fact = Rational(Integer(1), factorial(static_cast<long>(n)));
    // cosh^2 = (cosh 2t + 1)/2, sinh^2 = (cosh 2t - 1)/2, sinh cosh = sinh(2t)/2,
    // so their nonconstant coefficients are 2^(n-1)/n!.
    const Rational doubled = n == 0 ? Rational(0) : Rational(Integer(Integer(1) << (n - 1))) * inv_fact;
    Rational c;
    switch (kind) {
      case Elementary::kCosh:
        c = even ? inv_fact : Rational(0);
        break;
      case Elementary::kSinh:
        c = even ? Rational(0) : inv_fact;
        break;
      case Elementary::kCoshSquared:
        c = n == 0 ? Rational(1) : (even ? doubled : Rational(0));
        break;
      case Elementary::kSinhSquared:
        c = even ? doubled : Rational(0);
        break;
      case Elementary::kSinhCosh:
        c = even ? Rational(0) : doubled;
        break;
    }
    if (!c.is_zero()) out.set(n, MultiPoly::constant(num_vars, c));
  }
  return out;
}

}  // namespace kcycles
