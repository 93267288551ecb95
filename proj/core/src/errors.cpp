#include "kcycles/errors.hpp"

#include <utility>

namespace kcycles {

CapExceeded::CapExceeded(std::string cap_name, long long limit, long long requested)
    : std::runtime_error("enumeration cap '" + cap_name + "' exceeded: requested " +
                         std::to_string(requested) + ", limit " + std::to_string(limit)),
      cap_name_(std::move(cap_name)),
      limit_(limit),
      requested_(requested) {}

}  // namespace kcycles
