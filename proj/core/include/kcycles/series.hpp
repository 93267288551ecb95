#pragma once

#include <cstddef>
#include <vector>

#include "kcycles/multipoly.hpp"

namespace kcycles {

// Power series in t truncated after t^order, with polynomial coefficients.
// Terms of degree > order are discarded by every operation.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, std::size_t num_vars);
  // `coefficients.size()` becomes order + 1; all must share an arity.
  explicit TruncatedSeries(std::vector<MultiPoly> coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  std::size_t num_vars() const { return num_vars_; }
  const MultiPoly& operator[](std::size_t n) const { return coefficients_.at(n); }
  const std::vector<MultiPoly>& coefficients() const { return coefficients_; }

  void set(std::size_t n, MultiPoly coefficient);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const MultiPoly& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const MultiPoly& s) { return a *= s; }

  // d/dt; the result has one order less (order 0 stays order 0).
  TruncatedSeries derivative() const;
  // Drops or zero-extends to a new truncation order.
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_compatible(const TruncatedSeries& other, const char* op) const;

  std::size_t num_vars_;
  std::vector<MultiPoly> coefficients_;
};

enum class SeriesOp { kAdd, kMul };
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

enum class Elementary { kCosh, kSinh, kCoshSquared, kSinhSquared, kSinhCosh };
// Taylor expansion with constant (degree-0) polynomial coefficients.
TruncatedSeries series_elementary(Elementary kind, std::size_t order, std::size_t num_vars);

}  // namespace kcycles
