#pragma once

#include <stdexcept>
#include <string>

namespace kcycles {

// Raised when an exhaustive enumeration would exceed its configured cap.
// `cap_name` is the knob that controls it (e.g. "trees", "letters").
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, long long limit, long long requested);

  const std::string& cap_name() const noexcept { return cap_name_; }
  long long limit() const noexcept { return limit_; }
  long long requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  long long limit_;
  long long requested_;
};

// Arity or shape mismatch between algebraic objects (polynomials, series).
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A memoized prerequisite was missing, or a matrix that must be invertible
// was singular. Either one means the computation order is broken.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kcycles
