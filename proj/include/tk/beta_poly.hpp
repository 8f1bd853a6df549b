// Elements of K_*(CP^inf): integer combinations of t^m b_i with b_0 = 1.
#pragma once

#include "tk/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace tk {

/// Structure constant c^k_{ij}: the coefficient of b_k in b_i * b_j.
using StructureConstants = std::function<Integer(unsigned k, unsigned i, unsigned j)>;

/// c^k_{ij} = k! / ((k-j)! (k-i)! (i+j-k)!) on max(i,j) <= k <= i+j, else 0:
/// the coefficient of s^i t^j in (s + t + st)^k.
Integer structure_constant(unsigned k, unsigned i, unsigned j);

class BetaPoly {
 public:
  /// (t-exponent, beta index)
  using Key = std::pair<std::int64_t, unsigned>;
  using Terms = std::map<Key, Integer>;

  BetaPoly() = default;
  BetaPoly(int c) : BetaPoly(Integer(c)) {}
  BetaPoly(const Integer& c);

  static BetaPoly term(const Integer& c, std::int64_t t_exponent, unsigned index);
  static BetaPoly beta(unsigned index) { return term(1, 0, index); }
  static BetaPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::int64_t t_exponent, unsigned index) const;
  /// Largest beta index present (0 for the zero element).
  unsigned max_index() const;

  BetaPoly operator-() const;
  BetaPoly& operator+=(const BetaPoly& other);
  BetaPoly& operator-=(const BetaPoly& other);
  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
  friend bool operator==(const BetaPoly& a, const BetaPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. `5 + 3 t^2 b1 - b2`.
  std::string str() const;

 private:
  void add(const Key& key, const Integer& c);
  Terms terms_;
};

inline bool is_zero(const BetaPoly& x) { return x.is_zero(); }
std::string coefficient_text(const BetaPoly& x);

/// b_i * b_j as a combination of b_k.
BetaPoly beta_product(unsigned i, unsigned j);

/// Bilinear product with t-exponents adding, using the given constants.
BetaPoly multiply(const BetaPoly& x, const BetaPoly& y,
                  const StructureConstants& constants = structure_constant);

/// Parses sums of monomials `c t^m b<i>`; factors may be separated by
/// whitespace or '*'. `b0` and bare integers denote multiples of the unit.
BetaPoly parse_beta_poly(std::string_view text);

}  // namespace tk
