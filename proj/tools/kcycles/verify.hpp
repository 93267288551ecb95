#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kcycles/commands.hpp"

namespace kcycles::cli {

enum class VerifyLevel { kQuick, kFull };
VerifyLevel parse_verify_level(const std::string& name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  // One line per check, then a summary. Timings only when requested, so the
  // default output is reproducible byte for byte.
  void print(std::ostream& out, bool timings) const;
};

// Quick runs the anchored equalities; full adds the oracle equivalences and
// closed-form sweeps. With a cache configured, every cache entry is also
// recomputed and compared.
VerifyReport run_verify(VerifyLevel level, const Context& ctx);

}  // namespace kcycles::cli
