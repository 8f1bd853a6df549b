// Exact multivariate Laurent polynomials over Q.
#pragma once

#include "tk/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tk {

/// A finite sum of rational multiples of monomials with integer (possibly
/// negative) exponents. Variables are kept sorted by name; exponent tuples
/// are aligned with that order. No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Exponents = std::vector<std::int64_t>;
  using Terms = std::map<Exponents, Rational>;

  LaurentPoly() = default;

  /// Builds from a term map whose tuples follow `variables` (any order,
  /// no duplicates). Zero coefficients are dropped.
  static LaurentPoly from_terms(std::vector<std::string> variables, const Terms& terms);
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly variable(const std::string& name, std::int64_t exponent = 1);
  static LaurentPoly monomial(const std::vector<std::string>& variables,
                              const Exponents& exponents, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Index of `name` in variables(), or -1.
  int index_of(const std::string& name) const;

  Rational coefficient(const Exponents& exponents) const;
  /// Coefficient of the monomial given as variable -> exponent; absent
  /// variables have exponent 0.
  Rational coefficient(const std::map<std::string, std::int64_t>& monomial) const;

  /// Re-expresses over a superset of the current variables.
  LaurentPoly embed(const std::vector<std::string>& variables) const;
  /// Drops variables that occur with exponent 0 in every term.
  LaurentPoly compact() const;

  std::int64_t min_exponent(const std::string& name) const;
  std::int64_t max_exponent(const std::string& name) const;
  bool is_polynomial() const;
  /// True when every term has total degree `degree`.
  bool is_homogeneous(std::int64_t degree) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  /// Equal iff the term maps agree after embedding both into the union of
  /// their variables.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical text in the expression grammar, e.g. `1/2*v^2 - 1/2*u*v`.
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// f^n; negative n needs a single-term f.
LaurentPoly pow(const LaurentPoly& f, std::int64_t n);

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Image of f under the ring map sending each listed variable to its
/// expression (unlisted variables are fixed). A variable occurring with a
/// negative exponent must be sent to a unit of Q[x^{+-1}], i.e. a single
/// term with nonzero coefficient; otherwise NonInvertibleSubstitution.
LaurentPoly substitute(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& assignment);

/// Variable renaming, a special case of substitute.
LaurentPoly rename(const LaurentPoly& f, const std::map<std::string, std::string>& names);

/// Splits f by total degree; the components sum back to f.
std::map<std::int64_t, LaurentPoly> homogeneous_components(const LaurentPoly& f);

/// Univariate view: exponent -> coefficient, for a polynomial in at most
/// the single variable `name`.
std::map<std::int64_t, Rational> univariate_coefficients(const LaurentPoly& f,
                                                         const std::string& name);

}  // namespace tk
