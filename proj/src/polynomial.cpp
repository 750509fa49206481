#include "edgeideal/polynomial.hpp"

#include <algorithm>

#include "edgeideal/error.hpp"

namespace edgeideal {

Monomial Monomial::variable(int v) {
  ensure(v >= 0 && v < kMaxPolyVariables, "variable index within the polynomial ring cap");
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = 1;
  m.support = std::uint32_t{1} << v;
  m.degree = 1;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if ((support & ~o.support) != 0 || degree > o.degree) return false;
  for (std::size_t v = 0; v < exp.size(); ++v) {
    if (exp[v] > o.exp[v]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t v = 0; v < exp.size(); ++v) {
    const int e = exp[v] + o.exp[v];
    ensure(e <= 255, "exponent fits in a byte");
    m.exp[v] = static_cast<std::uint8_t>(e);
  }
  m.support = support | o.support;
  m.degree = degree + o.degree;
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t v = 0; v < exp.size(); ++v) {
    m.exp[v] = static_cast<std::uint8_t>(exp[v] - divisor.exp[v]);
    if (m.exp[v] > 0) m.support |= std::uint32_t{1} << v;
  }
  m.degree = degree - divisor.degree;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  for (std::size_t v = 0; v < exp.size(); ++v) {
    m.exp[v] = std::max(exp[v], o.exp[v]);
    m.degree += m.exp[v];
  }
  m.support = support | o.support;
  return m;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t v = 0; v < a.exp.size(); ++v) {
    if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
  }
  return 0;
}

Polynomial Polynomial::constant(int variable_count, const Rational& c) {
  return monomial(variable_count, c, Monomial::one());
}

Polynomial Polynomial::variable(int variable_count, int v) {
  ensure(v < variable_count, "variable inside the ring");
  return monomial(variable_count, 1, Monomial::variable(v));
}

Polynomial Polynomial::monomial(int variable_count, const Rational& c, const Monomial& m) {
  return from_terms(variable_count, {{c, m}});
}

Polynomial Polynomial::from_terms(int variable_count, std::vector<PolyTerm> terms) {
  if (variable_count > kMaxPolyVariables) fail(ErrorKind::TooLarge, "polynomial ring exceeds 32 variables");
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) { return compare(a.mono, b.mono) > 0; });
  Polynomial p(variable_count);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<PolyTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::max(nvars_, o.nvars_), std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<PolyTerm> all = terms_;
  for (const auto& t : o.terms_) all.push_back({-t.coeff, t.mono});
  return from_terms(std::max(nvars_, o.nvars_), std::move(all));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<PolyTerm> all;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) all.push_back({a.coeff * b.coeff, a.mono * b.mono});
  }
  return from_terms(std::max(nvars_, o.nvars_), std::move(all));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].coeff != o.terms_[k].coeff || !(terms_[k].mono == o.terms_[k].mono)) return false;
  }
  return true;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::string body;
    for (int v = 0; v < kMaxPolyVariables; ++v) {
      const int e = t.mono.exp[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)] : "v" + std::to_string(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += c.str();
    } else if (c == 1) {
      out += body;
    } else {
      out += c.str() + "*" + body;
    }
  }
  return out;
}

}  // namespace edgeideal
