#include "kcycles/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "kcycles/errors.hpp"

namespace kcycles {

namespace {

int degree_of(const Exponents& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

// Graded lex: higher total degree first, ties broken by larger exponent of
// the lowest-indexed variable.
std::vector<const MultiPoly::TermMap::value_type*> graded_lex_terms(const MultiPoly& p) {
  std::vector<const MultiPoly::TermMap::value_type*> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) out.push_back(&term);
  std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    const int da = degree_of(a->first);
    const int db = degree_of(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  return out;
}

std::string default_name(std::size_t i, bool latex) {
  return latex ? "x_{" + std::to_string(i) + "}" : "x" + std::to_string(i);
}

std::string render(const MultiPoly& p, const std::vector<std::string>& names, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto* term : graded_lex_terms(p)) {
    const Exponents& e = term->first;
    Rational c = term->second;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    if (c.sign() < 0) c = -c;
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string name = i < names.size() ? names[i] : default_name(i, latex);
      if (e[i] > 1) {
        if (name.find('+') != std::string::npos) name = (latex ? "\\left(" : "(") + name + (latex ? "\\right)" : ")");
        name += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
      } else if (name.find('+') != std::string::npos) {
        name = (latex ? "\\left(" : "(") + name + (latex ? "\\right)" : ")");
      }
      factors.push_back(std::move(name));
    }

    const bool unit = c == Rational(1);
    if (!unit || factors.empty()) {
      if (latex && !c.is_integer()) {
        out << "\\frac{" << c.numerator().get_str() << "}{" << c.denominator().get_str() << "}";
      } else {
        out << c.to_string();
      }
      if (!factors.empty()) out << (latex ? " " : "*");
    }
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f > 0) out << (latex ? " " : "*");
      out << factors[f];
    }
  }
  return out.str();
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& value) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw ShapeMismatch("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::variable_sum(std::size_t num_vars, std::size_t first, std::size_t last) {
  MultiPoly p(num_vars);
  for (std::size_t i = first; i <= last; ++i) p += variable(num_vars, i);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Rational& coefficient) {
  MultiPoly p(exponents.size());
  p.add_term(exponents, coefficient);
  return p;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != num_vars_) throw ShapeMismatch("exponent vector length differs from num_vars");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
  return best;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& term) { return degree_of(term.first) == d; });
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= num_vars_) throw ShapeMismatch("variable index out of range");
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[var]));
  return best;
}

void MultiPoly::require_same_arity(const MultiPoly& other, const char* op) const {
  if (num_vars_ != other.num_vars_) {
    throw ShapeMismatch(std::string(op) + ": polynomials in " + std::to_string(num_vars_) + " and " +
                        std::to_string(other.num_vars_) + " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_arity(other, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = poly_mul(*this, other);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  if (p.num_vars() != q.num_vars()) {
    throw ShapeMismatch("multiply: polynomials in " + std::to_string(p.num_vars()) + " and " +
                        std::to_string(q.num_vars()) + " variables");
  }
  MultiPoly result(p.num_vars());
  Exponents e(p.num_vars());
  Rational product;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ep[i] + eq[i]);
      product = cp;
      product *= cq;
      result.add_term(e, product);
    }
  }
  return result;
}

MultiPoly poly_substitute(const MultiPoly& p, std::size_t var, const MultiPoly& replacement) {
  if (var >= p.num_vars()) throw ShapeMismatch("substitute: variable index out of range");
  if (replacement.num_vars() != p.num_vars()) throw ShapeMismatch("substitute: replacement arity differs");
  const int max_power = std::max(p.degree_in(var), 0);
  std::vector<MultiPoly> powers{MultiPoly::constant(p.num_vars(), 1)};
  for (int i = 1; i <= max_power; ++i) powers.push_back(powers.back() * replacement);

  // Group terms by their power of x_var so each power is multiplied once.
  std::vector<MultiPoly> buckets(static_cast<std::size_t>(max_power) + 1, MultiPoly(p.num_vars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    buckets[e[var]].add_term(rest, c);
  }
  MultiPoly result(p.num_vars());
  for (std::size_t power = 0; power < buckets.size(); ++power) {
    if (!buckets[power].is_zero()) result += buckets[power] * powers[power];
  }
  return result;
}

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.num_vars()) throw ShapeMismatch("eval: point length differs from num_vars");
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    const int d = std::max(p.degree_in(i), 0);
    powers[i].push_back(Rational(1));
    for (int j = 1; j <= d; ++j) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational total;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    total += term;
  }
  return total;
}

MultiPoly poly_embed(const MultiPoly& p, std::size_t num_vars) {
  if (num_vars < p.num_vars()) throw ShapeMismatch("embed: cannot drop variables");
  MultiPoly result(num_vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents wide(num_vars, 0);
    std::copy(e.begin(), e.end(), wide.begin());
    result.add_term(wide, c);
  }
  return result;
}

std::string to_text(const MultiPoly& p, const std::vector<std::string>& names) {
  return render(p, names, false);
}

std::string to_latex(const MultiPoly& p, const std::vector<std::string>& names) {
  return render(p, names, true);
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_text(p); }

}  // namespace kcycles
