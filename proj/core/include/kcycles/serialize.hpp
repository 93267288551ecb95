#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "kcycles/coefficients.hpp"
#include "kcycles/multipoly.hpp"
#include "kcycles/partition.hpp"

namespace kcycles {

inline constexpr int kTableSchemaVersion = 1;

// {"num_vars": N, "terms": [{"exp": [...], "coeff": "p/q"}, ...]} with terms
// sorted by exponent vector.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& doc);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& doc);

// {"version": 1, "weight": n, "order": [...], "b": [[...]], "a": [[...]]}.
nlohmann::json table_to_json(const CoeffMatrix& b, const CoeffMatrix& a);

// {"lambda": [...], "mu": [...], "terms": {"1,1": "2", ...}}.
nlohmann::json cup_to_json(const Partition& lambda, const Partition& mu,
                           const std::map<Partition, Rational>& terms);

}  // namespace kcycles
