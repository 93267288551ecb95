#include "kcycles/commands.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "kcycles/closed_forms.hpp"
#include "kcycles/coefficients.hpp"
#include "kcycles/cyclic_shuffle.hpp"
#include "kcycles/increasing_tree.hpp"
#include "kcycles/serialize.hpp"
#include "kcycles/sign_sums.hpp"
#include "kcycles/tree_poly.hpp"

namespace kcycles::cli {

namespace {

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const std::string sign = r.sign() < 0 ? "-" : "";
  const Integer num = r.sign() < 0 ? Integer(-r.numerator()) : r.numerator();
  return sign + "\\frac{" + num.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string render_poly(const MultiPoly& p, Format format) {
  return format == Format::kLatex ? to_latex(p) : to_text(p);
}

// Variable names for a polynomial whose x0 has been substituted away and
// whose x1 stands for x0 + x1.
std::vector<std::string> collapsed_names(std::size_t num_vars, Format format) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (format == Format::kLatex) {
      names.push_back(i == 1 ? "x_{0}+x_{1}" : "x_{" + std::to_string(i) + "}");
    } else {
      names.push_back(i == 1 ? "x0+x1" : "x" + std::to_string(i));
    }
  }
  return names;
}

std::string map_as_text(const std::map<Partition, Rational>& terms) {
  std::ostringstream out;
  for (const auto& [p, v] : terms) out << (p.empty() ? "()" : p.key()) << ": " << v << '\n';
  return out.str();
}

// Linear combination of basis elements open + key + close, in the map's
// partition order.
std::string map_as_latex(const std::map<Partition, Rational>& terms, const char* open, const char* close) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [nu, c] : terms) {
    if (!first) out << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) out << "-";
    first = false;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (magnitude != Rational(1)) out << latex_rational(magnitude) << " ";
    out << open << nu.key() << close;
  }
  if (first) out << "0";
  out << '\n';
  return out.str();
}

nlohmann::json terms_json(const std::map<Partition, Rational>& terms) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [p, v] : terms) out[p.key()] = v.to_string();
  return out;
}

std::string verdict(bool equal) { return equal ? "equal" : "UNEQUAL"; }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "text") return Format::kText;
  if (name == "latex") return Format::kLatex;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, text or latex)");
}

Route parse_route(const std::string& name) {
  if (name == "recursion") return Route::kRecursion;
  if (name == "bruteforce") return Route::kBruteForce;
  throw std::invalid_argument("unknown route '" + name + "' (expected recursion or bruteforce)");
}

std::string render_reduced(const MultiPoly& p, Format format) {
  if (p.num_vars() < 2) return render_poly(p, format);
  const MultiPoly at_zero = poly_substitute(p, 0, MultiPoly(p.num_vars()));
  const MultiPoly shifted = MultiPoly::variable_sum(p.num_vars(), 0, 1);
  if (poly_substitute(at_zero, 1, shifted) != p) return render_poly(p, format);
  const auto names = collapsed_names(p.num_vars(), format);
  return format == Format::kLatex ? to_latex(at_zero, names) : to_text(at_zero, names);
}

nlohmann::json treepoly_result(int k, const std::string& variant, Route route, const Context& ctx) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  int l_index = -1;
  if (variant.rfind("l:", 0) == 0) {
    l_index = parse_int(variant.substr(2), "L index");
    if (l_index < 0) throw std::invalid_argument("L index must be >= 0");
  } else if (variant != "reduced" && variant != "full" && variant != "pfamily") {
    throw std::invalid_argument("unknown variant '" + variant + "' (expected reduced, full, pfamily or l:<n>)");
  }
  if (route == Route::kBruteForce && (variant != "reduced" && variant != "full")) {
    throw std::invalid_argument("the bruteforce route only produces the reduced and full variants");
  }
  const nlohmann::json params = {{"k", k}, {"variant", variant}, {"route", route == Route::kRecursion ? "recursion" : "bruteforce"}};
  if (auto hit = ctx.cache.load("treepoly", params)) return *hit;

  nlohmann::json result;
  if (variant == "pfamily") {
    result = nlohmann::json::object();
    for (const auto& [c, p] : p_family(k)->polys) result[std::to_string(c)] = poly_to_json(p);
  } else if (l_index >= 0) {
    result = poly_to_json(l_poly(k, l_index));
  } else {
    MultiPoly reduced = route == Route::kBruteForce ? reduced_tree_poly_bruteforce(k, ctx.caps) : reduced_tree_poly(k);
    if (variant == "full") reduced = MultiPoly::variable(reduced.num_vars(), 0) * reduced;
    result = poly_to_json(reduced);
  }
  ctx.cache.store("treepoly", params, result);
  return result;
}

std::string treepoly_command(int k, const std::string& variant, Route route, Format format, const Context& ctx) {
  const nlohmann::json result = treepoly_result(k, variant, route, ctx);
  if (format == Format::kJson) {
    return nlohmann::json{{"k", k}, {"variant", variant}, {"result", result}}.dump(2) + "\n";
  }
  if (variant == "pfamily") {
    std::vector<std::pair<int, MultiPoly>> polys;
    for (const auto& [c, doc] : result.items()) polys.emplace_back(std::stoi(c), poly_from_json(doc));
    std::sort(polys.begin(), polys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    for (const auto& [c, p] : polys) {
      if (format == Format::kLatex) {
        out << "P_{" << k << "}^{" << c << "} = " << to_latex(p) << '\n';
      } else {
        out << "P_" << k << "^" << c << " = " << to_text(p) << '\n';
      }
    }
    return out.str();
  }
  const MultiPoly p = poly_from_json(result);
  return (variant == "reduced" ? render_reduced(p, format) : render_poly(p, format)) + "\n";
}

std::string coeff_command(const std::string& kind, const Partition& lambda, const std::string& mu_text, Format format) {
  if (kind != "a" && kind != "b") throw std::invalid_argument("coefficient kind must be 'a' or 'b'");
  if (lambda.empty()) throw std::invalid_argument("--lambda must be a nonempty partition");
  const Partition mu = mu_text == "auto-n" ? Partition{lambda.weight()} : Partition::parse(mu_text);
  if (mu.weight() != lambda.weight()) {
    throw std::invalid_argument("weights differ: |lambda| = " + std::to_string(lambda.weight()) +
                                ", |mu| = " + std::to_string(mu.weight()));
  }
  CoeffTable table;
  const Rational value = kind == "b" ? table.b_lambda_mu(lambda, mu) : table.a_lambda_mu(lambda, mu);
  switch (format) {
    case Format::kJson:
      return nlohmann::json{{"kind", kind}, {"lambda", partition_to_json(lambda)}, {"mu", partition_to_json(mu)},
                            {"value", value.to_string()}}.dump(2) + "\n";
    case Format::kLatex:
      return kind + "_{" + lambda.key() + "}^{" + mu.key() + "} = " + latex_rational(value) + "\n";
    case Format::kText:
      break;
  }
  return value.to_string() + "\n";
}

nlohmann::json table_result(int weight, const Context& ctx) {
  if (weight < 1) throw std::invalid_argument("table weight must be >= 1");
  const nlohmann::json params = {{"weight", weight}, {"table_schema", kTableSchemaVersion}};
  if (auto hit = ctx.cache.load("table", params)) return *hit;
  CoeffTable table;
  nlohmann::json result = table_to_json(table.b_matrix(weight), table.a_matrix(weight));
  ctx.cache.store("table", params, result);
  return result;
}

std::string cup_command(const Partition& lambda, const Partition& mu, Format format) {
  CoeffTable table;
  const auto terms = table.cup_coeff(lambda, mu);
  switch (format) {
    case Format::kJson:
      return cup_to_json(lambda, mu, terms).dump(2) + "\n";
    case Format::kLatex:
      return map_as_latex(terms, "[W_{", "}^*]");
    case Format::kText:
      break;
  }
  return map_as_text(terms);
}

std::string witten_command(const Partition& lambda, Format format) {
  CoeffTable table;
  const auto terms = table.witten_expansion(lambda);
  switch (format) {
    case Format::kJson:
      return nlohmann::json{{"lambda", partition_to_json(lambda)}, {"terms", terms_json(terms)}}.dump(2) + "\n";
    case Format::kLatex:
      return map_as_latex(terms, "\\tilde\\kappa_{", "}");
    case Format::kText:
      break;
  }
  return map_as_text(terms);
}

OracleReport oracle_command(const std::string& what, const std::vector<std::string>& args, const Context& ctx) {
  auto need = [&](std::size_t count, const char* usage) {
    if (args.size() != count) throw std::invalid_argument(std::string("usage: oracle ") + usage);
  };
  std::ostringstream out;
  OracleReport report;
  if (what == "treepoly") {
    need(1, "treepoly K");
    const int k = parse_int(args[0], "k");
    const MultiPoly brute = reduced_tree_poly_bruteforce(k, ctx.caps);
    const MultiPoly recursion = reduced_tree_poly(k);
    report.equal = brute == recursion;
    out << "increasing trees: " << brute.size() << " monomials\n"
        << "recursion:        " << recursion.size() << " monomials\n";
  } else if (what == "shuffle-sum") {
    need(1, "shuffle-sum N0,N1,...");
    const std::vector<int> tuple = parse_int_list(args[0], "tuple entry");
    const OddTuple odd(tuple);
    const Integer brute = tree_poly_bruteforce(tuple, ctx.caps);
    std::vector<Rational> point(tuple.begin(), tuple.end());
    const Rational closed = poly_eval(tree_poly(odd.k()), point);
    report.equal = Rational(brute) == closed;
    out << "cyclic shuffles: " << brute << "\n"
        << "x0 * T~_k:       " << closed << "\n";
  } else if (what == "counting") {
    need(2, "counting N S");
    const int n = parse_int(args[0], "n");
    const int s = parse_int(args[1], "s");
    const Integer brute = counting_lemma_bruteforce(n, s, ctx.caps);
    const Integer closed = counting_lemma_closed(n, s);
    report.equal = brute == closed;
    out << "brute force: " << brute << "\n"
        << "closed form: " << closed << "\n";
  } else if (what == "xe") {
    need(3, "xe X0|X1|X2 N M");
    const SignSumVariant variant = parse_sign_sum_variant(args[0]);
    const int n = parse_int(args[1], "n");
    const int m = parse_int(args[2], "m");
    const Integer brute = shuffle_sign_sum_bruteforce(variant, n, m, ctx.caps);
    const XeValue closed = xe_tables(variant, n, m);
    report.equal = brute == closed.x;
    out << "brute force: " << brute << "\n"
        << "closed form: " << closed.x << " (average " << closed.e << ")\n";
  } else {
    throw std::invalid_argument("unknown oracle '" + what + "' (expected treepoly, shuffle-sum, counting or xe)");
  }
  out << verdict(report.equal) << "\n";
  report.text = out.str();
  return report;
}

}  // namespace kcycles::cli
