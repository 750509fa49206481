#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace edgeideal {

inline constexpr int kMaxPolyVariables = 32;

using Rational = boost::multiprecision::cpp_rational;

struct Monomial {
  std::array<std::uint8_t, kMaxPolyVariables> exp{};
  std::uint32_t support = 0;  // bit v set iff exp[v] > 0
  int degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int v);

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial quotient(const Monomial& divisor) const;  // requires divisor | *this
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const { return (support & o.support) == 0; }

  bool operator==(const Monomial&) const = default;
};

// Degree reverse lexicographic with variable 0 smallest: higher degree wins,
// then the monomial with the smaller exponent at the smallest differing
// variable is larger. Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b);

struct PolyTerm {
  Rational coeff;
  Monomial mono;
};

// Sparse polynomial with rational coefficients, terms strictly decreasing.
class Polynomial {
 public:
  explicit Polynomial(int variable_count = 0) : nvars_(variable_count) {}

  static Polynomial constant(int variable_count, const Rational& c);
  static Polynomial variable(int variable_count, int v);
  static Polynomial monomial(int variable_count, const Rational& c, const Monomial& m);
  // Combines like terms, drops zeros, sorts.
  static Polynomial from_terms(int variable_count, std::vector<PolyTerm> terms);

  int variable_count() const { return nvars_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const PolyTerm& leading() const { return terms_.front(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;

 private:
  int nvars_ = 0;
  std::vector<PolyTerm> terms_;
};

// Names default to v0, v1, ...
std::string to_string(const Polynomial& p, const std::vector<std::string>& names = {});

}  // namespace edgeideal
