#pragma once

#include "torsionlab/error.hpp"
#include "torsionlab/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace torsionlab {

/// Orders unknown names: "<prefix>_<i>_<j>" grid names first, row-major within a prefix,
/// then any other name lexicographically.
struct VarLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

/// Power product of named unknowns.
class Monomial {
 public:
  using Exponents = std::map<std::string, unsigned, VarLess>;

  Monomial() = default;
  explicit Monomial(Exponents e);
  static Monomial variable(const std::string& name, unsigned power = 1);

  const Exponents& exponents() const noexcept { return exps_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(const std::string& var) const;
  bool is_one() const noexcept { return exps_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  Exponents exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order; the first unknown in VarLess order is the most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class PolyQ {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  PolyQ() = default;
  PolyQ(const Rational& c);  // NOLINT: constants promote implicitly
  PolyQ(int c);              // NOLINT
  static PolyQ variable(const std::string& name);
  static PolyQ term(const Rational& c, Monomial m);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Monomial& m) const;
  int total_degree() const;
  std::set<std::string, VarLess> variables() const;

  /// Highest term in graded-lex order; zero polynomial has none.
  std::optional<std::pair<Monomial, Rational>> leading_term() const;

  PolyQ substitute(const std::string& var, const PolyQ& value) const;
  PolyQ substitute(const std::map<std::string, PolyQ>& values) const;
  /// Exact value; every unknown must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Factor c with *this == c * other, if one exists (zero polynomials are proportional only to zero).
  std::optional<Rational> ratio_to(const PolyQ& other) const;
  /// Scaled so that the leading coefficient is positive (content untouched).
  PolyQ sign_normalized() const;

  /// True when the polynomial is c * (positive constant + sum of even pure powers with positive
  /// coefficients) for some nonzero c, hence has no real zero.
  bool is_definite_sum_of_squares() const;

  std::string to_string() const;
  std::string to_latex() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ c = a;
    return c *= b;
  }
  friend PolyQ operator-(const PolyQ& a);
  PolyQ pow(unsigned k) const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Parses expressions like "2*(xi_2_2 + xi_1_1)*xi_1_2 - (xi_3_1)^2 + 1".
/// Identifiers are [A-Za-z_][A-Za-z0-9_]*; numbers may be "p/q" only through division by a literal.
PolyQ parse_poly(std::string_view text);

/// LaTeX name of an unknown: "xi_2_3" -> "\xi^{2}_{3}", "lambda" -> "\lambda".
std::string latex_name(const std::string& var);

}  // namespace torsionlab
