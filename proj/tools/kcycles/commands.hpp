#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcycles/cache.hpp"
#include "kcycles/caps.hpp"
#include "kcycles/multipoly.hpp"
#include "kcycles/partition.hpp"

namespace kcycles::cli {

enum class Format { kJson, kText, kLatex };
Format parse_format(const std::string& name);

// How a tree polynomial is produced: the P recursion or the increasing-tree
// enumeration (capped by EnumCaps::max_tree_k).
enum class Route { kRecursion, kBruteForce };
Route parse_route(const std::string& name);

struct Context {
  EnumCaps caps;
  ResultCache cache;
};

// Variants: "reduced", "full", "pfamily" or "l:<n>".
nlohmann::json treepoly_result(int k, const std::string& variant, Route route, const Context& ctx);
std::string treepoly_command(int k, const std::string& variant, Route route, Format format, const Context& ctx);

// `mu` may be "auto-n", meaning the one-part partition of |lambda|.
std::string coeff_command(const std::string& kind, const Partition& lambda, const std::string& mu, Format format);

nlohmann::json table_result(int weight, const Context& ctx);

std::string cup_command(const Partition& lambda, const Partition& mu, Format format);
std::string witten_command(const Partition& lambda, Format format);

struct OracleReport {
  std::string text;
  bool equal = false;
};
// what: "treepoly" (k), "shuffle-sum" (comma tuple), "counting" (n s) or
// "xe" (variant n m).
OracleReport oracle_command(const std::string& what, const std::vector<std::string>& args, const Context& ctx);

// Renders T~_k in text or LaTeX. When the polynomial depends on x0 and x1
// only through x0 + x1 it is written in terms of (x0+x1).
std::string render_reduced(const MultiPoly& p, Format format);

}  // namespace kcycles::cli
