#include "kcycles/serialize.hpp"

#include <stdexcept>

#include "kcycles/errors.hpp"

namespace kcycles {

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", e}, {"coeff", c.to_string()}});
  }
  return {{"num_vars", p.num_vars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const nlohmann::json& doc) {
  const auto num_vars = doc.at("num_vars").get<std::size_t>();
  MultiPoly p(num_vars);
  for (const auto& term : doc.at("terms")) {
    auto e = term.at("exp").get<Exponents>();
    if (e.size() != num_vars) throw ShapeMismatch("polynomial document: exponent length differs from num_vars");
    p.add_term(e, Rational::parse(term.at("coeff").get<std::string>()));
  }
  return p;
}

nlohmann::json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const nlohmann::json& doc) { return Partition(doc.get<std::vector<int>>()); }

namespace {

nlohmann::json matrix_to_json(const CoeffMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& value : row) cells.push_back(value.to_string());
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

nlohmann::json table_to_json(const CoeffMatrix& b, const CoeffMatrix& a) {
  if (b.order != a.order || b.weight != a.weight) throw ShapeMismatch("b and a tables cover different partitions");
  nlohmann::json order = nlohmann::json::array();
  for (const auto& p : b.order) order.push_back(partition_to_json(p));
  return {{"version", kTableSchemaVersion},
          {"weight", b.weight},
          {"order", std::move(order)},
          {"b", matrix_to_json(b)},
          {"a", matrix_to_json(a)}};
}

nlohmann::json cup_to_json(const Partition& lambda, const Partition& mu, const std::map<Partition, Rational>& terms) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [nu, value] : terms) out[nu.key()] = value.to_string();
  return {{"lambda", partition_to_json(lambda)}, {"mu", partition_to_json(mu)}, {"terms", std::move(out)}};
}

}  // namespace kcycles
