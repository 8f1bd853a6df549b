// The ring K_*(CP^inf): formal-group-law identities, truncations, and the
// augmentation onto Z[t, t^-1].
#pragma once

#include "tk/beta_poly.hpp"
#include "tk/linalg.hpp"
#include "tk/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tk {

/// An element of Z[t, t^-1].
class HatScalar {
 public:
  HatScalar() = default;
  HatScalar(const Integer& c) { add(0, c); }
  static HatScalar monomial(const Integer& c, std::int64_t exponent);

  const std::map<std::int64_t, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Value at t = 1.
  Integer at_one() const;

  HatScalar& operator+=(const HatScalar& o);
  friend HatScalar operator+(HatScalar a, const HatScalar& b) { return a += b; }
  friend HatScalar operator*(const HatScalar& a, const HatScalar& b);
  friend bool operator==(const HatScalar& a, const HatScalar& b) { return a.terms_ == b.terms_; }

  /// e.g. `5 + 2t`, `t^-1`.
  std::string str() const;

 private:
  void add(std::int64_t e, const Integer& c);
  std::map<std::int64_t, Integer> terms_;
};

/// [n](s) through `order`, by the recurrence [n] = [n-1] + s + s[n-1].
TruncSeries<Integer> n_series(unsigned n, unsigned order, const std::string& variable = "s");

/// b(r) = sum_{i <= order} b_i r^i.
TruncSeries<BetaPoly> beta_series(const std::string& variable, unsigned order);

struct IdentityReport {
  bool pass = true;
  std::string identity;
  /// First differing coefficient, empty on success.
  std::string counterexample;
};

/// b(s)^m = b([m](s)) coefficientwise through `order`.
IdentityReport fgl_identity_check(unsigned m, unsigned order,
                                  const StructureConstants& constants = structure_constant);
/// b(s) b(t) = b(s + t + st) coefficientwise through total `order`.
IdentityReport fgl_product_identity_check(unsigned order,
                                          const StructureConstants& constants = structure_constant);

/// The quotient of K_*(CP^inf) (t set to 1 where a Z-form is needed) by
/// the span of b_i, i > D. Basis b_0..b_D.
class TruncRing {
 public:
  /// Builds the structure-constant table and checks the support condition
  /// that makes the span of b_{>D} an ideal.
  explicit TruncRing(unsigned truncation, const StructureConstants& constants = structure_constant);

  unsigned truncation() const { return d_; }
  unsigned rank() const { return d_ + 1; }
  const Integer& constant(unsigned k, unsigned i, unsigned j) const { return table_[(k * rank() + i) * rank() + j]; }

  /// Product of two truncated elements with coefficients (t-exponent, index)
  /// kept; indices above D are dropped.
  BetaPoly multiply(const BetaPoly& x, const BetaPoly& y) const;
  /// Product in coordinates b_0..b_D (t = 1).
  IntVector multiply(const IntVector& x, const IntVector& y) const;
  /// Matrix of multiplication by b_k on the Z-basis b_0..b_D.
  const IntMatrix& action(unsigned k) const { return actions_[k]; }
  /// Matrix of multiplication by an element given in coordinates.
  IntMatrix action(const IntVector& x) const;

  /// Coordinates of x with t = 1; MalformedPresentation when an index
  /// exceeds D.
  IntVector coordinates(const BetaPoly& x) const;

  /// The augmentation b_0, b_1 -> 1, b_{>=2} -> 0 as a row on coordinates.
  const Eigen::Matrix<Integer, 1, Eigen::Dynamic>& augmentation() const { return augmentation_; }

 private:
  unsigned d_;
  std::vector<Integer> table_;
  std::vector<IntMatrix> actions_;
  Eigen::Matrix<Integer, 1, Eigen::Dynamic> augmentation_;
};

/// The ring map t -> t, b_0 -> 1, b_1 -> 1, b_{>=2} -> 0.
HatScalar augment_hat(const BetaPoly& x);

/// Whether b_i * x is nonzero in the untruncated ring; also checks that
/// each top-index coefficient equals binom(i + j_max, i) times that of x.
/// ZeroInput for x = 0.
bool injectivity_witness(unsigned i, const BetaPoly& x);

}  // namespace tk
