// K_*K as integrality-constrained Laurent polynomials f(u, v) with
// u = eta_L(t) and v = eta_R(t), and its Hopf algebroid structure maps.
#pragma once

#include "tk/beta_poly.hpp"
#include "tk/cp_ring.hpp"
#include "tk/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tk {

enum class Integrality { unchecked, member, non_member };

class KKElement {
 public:
  KKElement() = default;
  /// `poly` may only use the variables u and v.
  explicit KKElement(LaurentPoly poly, Integrality status = Integrality::unchecked);

  const LaurentPoly& poly() const { return poly_; }
  Integrality integrality() const { return status_; }
  /// A copy whose integrality status has been decided.
  KKElement checked() const;

  friend KKElement operator+(const KKElement& a, const KKElement& b) { return KKElement(a.poly_ + b.poly_); }
  friend KKElement operator-(const KKElement& a, const KKElement& b) { return KKElement(a.poly_ - b.poly_); }
  friend KKElement operator*(const KKElement& a, const KKElement& b) { return KKElement(a.poly_ * b.poly_); }
  friend bool operator==(const KKElement& a, const KKElement& b) { return a.poly_ == b.poly_; }

  std::string str() const { return poly_.str(); }

 private:
  LaurentPoly poly_;
  Integrality status_ = Integrality::unchecked;
};

/// Evidence that f is not in K_*K: the coefficient of t^degree in f(t, kt)
/// has a prime in its denominator that does not divide k.
struct Witness {
  Integer k;
  std::int64_t degree = 0;
  Rational coefficient;
  std::string str() const;
};

struct Membership {
  bool member = false;
  std::optional<Witness> witness;
};

/// p_i = v(v-u)...(v-(i-1)u)/i!, i >= 1 (p_0 = 1 for convenience).
const KKElement& p_poly(unsigned i);
/// p'_i = (v-u)(v-2u)...(v-iu)/(i+1)!, p'_0 = 1.
const KKElement& pprime_poly(unsigned i);

/// Membership in the image of K_*K in Q[u^{+-1}, v^{+-1}]: each homogeneous
/// component of degree r gives h(w) = component(1, w); with m the largest
/// prime exponent in the denominators of h and
/// N = max(0, max(1, m) - minexp(h)), the component is integral iff w^N h
/// has integer coefficients in the binomial basis.
Membership membership(const KKElement& f);
bool is_integral(const KKElement& f);

/// Independent check by evaluation: the first k in 1, -1, 2, -2, ..., range,
/// -range at which a coefficient of f(t, kt) leaves Z[1/k].
std::optional<Witness> sampled_failure(const KKElement& f, unsigned range);

/// index i -> coefficient in Z[u^{+-1}, v^{-1}]; f = sum coeff_i * p_i.
using Decomposition = std::map<unsigned, LaurentPoly>;

/// Decomposition over the p_i. For each degree-r component, N is the least
/// shift (at most the bound above) making w^N h integer-valued; with
/// w^N h = sum c_i P_i the component contributes c_i u^{r+N-i} v^{-N} to
/// coeff_i. NotIntegral (with a witness) otherwise.
Decomposition decompose(const KKElement& f);
LaurentPoly recombine(const Decomposition& d);
/// `sum_i (coeff_i) * p_i`, p_0 standing for 1.
std::string decomposition_text(const Decomposition& d);

/// Localization certificate: v^N f rewritten with coefficients in
/// Z[u^{+-1}] using v p_i = (i+1) p_{i+1} + i u p_i. `steps` records every
/// intermediate combination (each sums to v^N f).
struct LocalizationWitness {
  std::int64_t n = 0;
  Decomposition coefficients;
  std::vector<Decomposition> steps;
};
LocalizationWitness localization_witness(const KKElement& f);

/// t^m b_i -> u^{m-i} p_i.
KKElement i_star(const BetaPoly& x);

/// f(t, t) for integral f; NotIntegral otherwise.
HatScalar epsilon(const KKElement& f);
/// f(t, t) with rational coefficients, for any f.
LaurentPoly epsilon_rational(const LaurentPoly& f);

/// u <-> v.
KKElement conjugate(const KKElement& f);

/// An element of the arity-fold cotensor power of K_*K in chain variables
/// z0..z_arity: factor j uses (z_{j-1}, z_j), adjacent factors share the
/// K_*-scalar through their common variable.
struct TensorChain {
  unsigned arity = 1;
  LaurentPoly poly;
  friend bool operator==(const TensorChain& a, const TensorChain& b) {
    return a.arity == b.arity && a.poly == b.poly;
  }
};

std::string chain_variable(unsigned j);
TensorChain as_chain(const KKElement& f);
/// psi(f)(z0, z1, z2) = f(z0, z2).
TensorChain coproduct(const KKElement& f);
/// (eps (x) 1) and (1 (x) eps) on an arity-2 chain, returned in (u, v).
KKElement counit_left(const TensorChain& c);
KKElement counit_right(const TensorChain& c);
/// (psi (x) 1) and (1 (x) psi) from arity 2 to arity 3.
TensorChain coproduct_left(const TensorChain& c);
TensorChain coproduct_right(const TensorChain& c);

/// sum_j a_j (x) b_j with every right-hand t pushed left as v; a_j in (u, v).
class CoactionElement {
 public:
  CoactionElement() = default;
  explicit CoactionElement(std::map<unsigned, LaurentPoly> terms);
  const std::map<unsigned, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(unsigned j) const;
  friend bool operator==(const CoactionElement& a, const CoactionElement& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  std::map<unsigned, LaurentPoly> terms_;
};

/// Homogeneous degree-i part of P^j, P = 1 + p'_1 + p'_2 + ...
LaurentPoly p_power_component(unsigned j, unsigned i);

/// eta_L(t^k b_k) = sum_{i+j=k} (P^j)_{2i} (x) t^j b_j, in normal form.
CoactionElement eta_L_cp(unsigned k);

/// (eps (x) 1) of a coaction element, as an element of K_*(CP^inf).
BetaPoly coaction_counit(const CoactionElement& x);

/// eta_L(t^k b_k) followed by the augmentation on the right factor, the
/// surviving t entering as v. Equals p_k.
KKElement composite_hat(unsigned k);

}  // namespace tk
