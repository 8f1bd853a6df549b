#include "tk/kk.hpp"

#include "tk/binomial.hpp"
#include "tk/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace tk {

namespace {

const std::vector<std::string> kUV = {"u", "v"};

LaurentPoly u_pow(std::int64_t e) { return LaurentPoly::monomial(kUV, {e, 0}, 1); }
LaurentPoly v_pow(std::int64_t e) { return LaurentPoly::monomial(kUV, {0, e}, 1); }

/// Build-once, read-many cache; entries are never erased so references
/// stay valid.
template <typename Key, typename Value>
class Memo {
 public:
  template <typename Make>
  const Value& get(const Key& key, Make&& make) {
    {
      std::lock_guard lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = make();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

struct ComponentData {
  std::int64_t degree;
  std::map<std::int64_t, Rational> h;  // exponent of w -> coefficient
  std::int64_t shift = 0;              // smallest valid N, or the bound when none is
  std::vector<Rational> binomial;      // w^N h in the binomial basis
  bool integral = false;
};

bool all_integers(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_integer(c); });
}

ComponentData analyse(std::int64_t degree, const LaurentPoly& component) {
  ComponentData d;
  d.degree = degree;
  const LaurentPoly hw = rename(substitute(component, {{"u", LaurentPoly::constant(1)}}), {{"v", "w"}});
  d.h = univariate_coefficients(hw, "w");
  unsigned m = 0;
  std::int64_t minexp = d.h.begin()->first;
  for (const auto& [e, c] : d.h) {
    m = std::max(m, max_prime_exponent(denominator(c)));
    minexp = std::min(minexp, e);
  }
  // The bound decides membership; integer-valuedness of w^N h is preserved
  // by raising N, so the smallest valid N below it gives the same answer.
  const std::int64_t bound = std::max<std::int64_t>(0, std::max<std::int64_t>(1, m) - minexp);
  for (std::int64_t n = std::max<std::int64_t>(0, -minexp); n <= bound; ++n) {
    d.shift = n;
    d.binomial = binomial_expand(hw * LaurentPoly::variable("w", n));
    if (all_integers(d.binomial)) {
      d.integral = true;
      break;
    }
  }
  return d;
}

/// h(k) for integer k != 0.
Rational evaluate(const std::map<std::int64_t, Rational>& h, const Integer& k) {
  Rational acc = 0;
  for (const auto& [e, c] : h) {
    Integer p = 1;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) p *= k;
    acc += e < 0 ? c / Rational(p) : c * Rational(p);
  }
  return acc;
}

/// Smallest k >= 2 with a failing coefficient. Failures of w^N h to be
/// integer-valued recur with period L = lcm(denominators) and occur at k
/// prime to the offending prime, so k = 2..L+1 always contains one.
Witness find_witness(const ComponentData& d) {
  Integer period = 1;
  for (const auto& [e, c] : d.h) period = lcm(period, Integer(denominator(c)));
  for (Integer k = 2; k <= period + 1; ++k) {
    Rational value = evaluate(d.h, k);
    if (!primes_divide(denominator(value), k)) return Witness{k, d.degree, value};
  }
  throw ConsistencyError("non-member component without a witness in one period");
}

}  // namespace

KKElement::KKElement(LaurentPoly poly, Integrality status) : poly_(std::move(poly)), status_(status) {
  for (const auto& name : poly_.variables())
    if (name != "u" && name != "v") throw ValidationError("K_*K elements use only u and v, found '" + name + "'");
}

KKElement KKElement::checked() const {
  if (status_ != Integrality::unchecked) return *this;
  return KKElement(poly_, is_integral(*this) ? Integrality::member : Integrality::non_member);
}

std::string Witness::str() const {
  return "k=" + k.str() + ", coefficient of t^" + std::to_string(degree) + " in f(t," + k.str() +
         "t) is " + to_string(coefficient);
}

const KKElement& p_poly(unsigned i) {
  static Memo<unsigned, KKElement> memo;
  return memo.get(i, [i] {
    if (i == 0) return KKElement(LaurentPoly::constant(1), Integrality::member);
    LaurentPoly p = v_pow(1);
    for (unsigned l = 1; l < i; ++l) p *= v_pow(1) - u_pow(1) * Rational(l);
    return KKElement(p * Rational(1, factorial(i)), Integrality::member);
  });
}

const KKElement& pprime_poly(unsigned i) {
  static Memo<unsigned, KKElement> memo;
  return memo.get(i, [i] {
    LaurentPoly p = LaurentPoly::constant(1);
    for (unsigned l = 1; l <= i; ++l) p *= v_pow(1) - u_pow(1) * Rational(l);
    return KKElement(p * Rational(1, factorial(i + 1)));
  });
}

Membership membership(const KKElement& f) {
  for (const auto& [degree, component] : homogeneous_components(f.poly())) {
    ComponentData d = analyse(degree, component.embed(kUV));
    if (!d.integral) return Membership{false, find_witness(d)};
  }
  return Membership{true, std::nullopt};
}

bool is_integral(const KKElement& f) {
  if (f.integrality() != Integrality::unchecked) return f.integrality() == Integrality::member;
  return membership(f).member;
}

std::optional<Witness> sampled_failure(const KKElement& f, unsigned range) {
  const LaurentPoly t = LaurentPoly::variable("t");
  for (unsigned n = 1; n <= range; ++n) {
    for (const Integer& k : {Integer(n), Integer(-Integer(n))}) {
      const LaurentPoly g = substitute(f.poly(), {{"u", t}, {"v", t * Rational(k)}});
      for (const auto& [e, c] : univariate_coefficients(g, "t"))
        if (!primes_divide(denominator(c), abs(k))) return Witness{k, e, c};
    }
  }
  return std::nullopt;
}

Decomposition decompose(const KKElement& f) {
  Decomposition out;
  for (const auto& [degree, component] : homogeneous_components(f.poly())) {
    ComponentData d = analyse(degree, component.embed(kUV));
    if (!d.integral) throw NotIntegral("not in K_*K: " + find_witness(d).str());
    for (std::size_t i = 0; i < d.binomial.size(); ++i) {
      if (d.binomial[i] == 0) continue;
      const auto idx = static_cast<std::int64_t>(i);
      LaurentPoly c = LaurentPoly::monomial(kUV, {checked_add(degree, d.shift - idx), -d.shift}, d.binomial[i]);
      auto [it, inserted] = out.try_emplace(static_cast<unsigned>(i), c);
      if (!inserted) it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly recombine(const Decomposition& d) {
  LaurentPoly out;
  for (const auto& [i, c] : d) out += c * p_poly(i).poly();
  return out;
}

std::string decomposition_text(const Decomposition& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : d) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ") * p_" << i;
  }
  return os.str();
}

LocalizationWitness localization_witness(const KKElement& f) {
  LocalizationWitness w;
  Decomposition current = decompose(f);
  for (const auto& [i, c] : current) w.n = std::max(w.n, -c.embed(kUV).min_exponent("v"));
  for (auto& [i, c] : current) c = c * v_pow(w.n);
  w.steps.push_back(current);
  // Lower the v-degree one step at a time, starting from the lowest index.
  for (;;) {
    auto it = current.begin();
    for (; it != current.end(); ++it)
      if (it->second.embed(kUV).max_exponent("v") > 0) break;
    if (it == current.end()) break;
    const unsigned i = it->first;
    LaurentPoly::Terms lowered;
    LaurentPoly::Terms kept;
    const LaurentPoly coeff = it->second.embed(kUV);
    for (const auto& [e, c] : coeff.terms())
      (e[1] > 0 ? lowered : kept).emplace(LaurentPoly::Exponents{e[0], e[1] > 0 ? e[1] - 1 : e[1]}, c);
    const LaurentPoly down = LaurentPoly::from_terms(kUV, lowered);
    it->second = LaurentPoly::from_terms(kUV, kept) + down * u_pow(1) * Rational(i);
    current[i + 1] += down * Rational(i + 1);
    for (auto jt = current.begin(); jt != current.end();) jt = jt->second.is_zero() ? current.erase(jt) : std::next(jt);
    w.steps.push_back(current);
  }
  w.coefficients = current;
  return w;
}

KKElement i_star(const BetaPoly& x) {
  LaurentPoly out;
  for (const auto& [key, c] : x.terms()) {
    const auto [m, i] = key;
    out += u_pow(checked_add(m, -static_cast<std::int64_t>(i))) * p_poly(i).poly() * Rational(c);
  }
  return KKElement(out);
}

LaurentPoly epsilon_rational(const LaurentPoly& f) {
  const LaurentPoly t = LaurentPoly::variable("t");
  return substitute(f, {{"u", t}, {"v", t}});
}

HatScalar epsilon(const KKElement& f) {
  const Membership m = membership(f);
  if (!m.member) throw NotIntegral("epsilon needs an element of K_*K: " + m.witness->str());
  HatScalar out;
  for (const auto& [e, c] : univariate_coefficients(epsilon_rational(f.poly()), "t")) {
    if (!is_integer(c)) throw ConsistencyError("epsilon produced a non-integer coefficient");
    out += HatScalar::monomial(numerator(c), e);
  }
  return out;
}

KKElement conjugate(const KKElement& f) {
  return KKElement(rename(f.poly(), {{"u", "v"}, {"v", "u"}}), f.integrality());
}

std::string chain_variable(unsigned j) { return "z" + std::to_string(j); }

TensorChain as_chain(const KKElement& f) {
  return TensorChain{1, rename(f.poly(), {{"u", chain_variable(0)}, {"v", chain_variable(1)}})};
}

TensorChain coproduct(const KKElement& f) {
  return TensorChain{2, rename(f.poly(), {{"u", chain_variable(0)}, {"v", chain_variable(2)}})};
}

namespace {

void require_arity(const TensorChain& c, unsigned arity) {
  if (c.arity != arity) throw Error("expected a chain of arity " + std::to_string(arity));
}

LaurentPoly chain_var(unsigned j) { return LaurentPoly::variable(chain_variable(j)); }

}  // namespace

KKElement counit_left(const TensorChain& c) {
  require_arity(c, 2);
  const LaurentPoly g = substitute(c.poly, {{chain_variable(0), chain_var(1)}});
  return KKElement(rename(g, {{chain_variable(1), "u"}, {chain_variable(2), "v"}}));
}

KKElement counit_right(const TensorChain& c) {
  require_arity(c, 2);
  const LaurentPoly g = substitute(c.poly, {{chain_variable(2), chain_var(1)}});
  return KKElement(rename(g, {{chain_variable(0), "u"}, {chain_variable(1), "v"}}));
}

TensorChain coproduct_left(const TensorChain& c) {
  require_arity(c, 2);
  return TensorChain{3, substitute(c.poly, {{chain_variable(1), chain_var(2)}, {chain_variable(2), chain_var(3)}})};
}

TensorChain coproduct_right(const TensorChain& c) {
  require_arity(c, 2);
  return TensorChain{3, substitute(c.poly, {{chain_variable(2), chain_var(3)}})};
}

CoactionElement::CoactionElement(std::map<unsigned, LaurentPoly> terms) {
  for (auto& [j, a] : terms)
    if (!a.is_zero()) terms_.emplace(j, std::move(a));
}

LaurentPoly CoactionElement::coefficient(unsigned j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::string CoactionElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.str() << ") (x) " << (it->first == 0 ? std::string("1") : "b" + std::to_string(it->first));
  }
  return os.str();
}

LaurentPoly p_power_component(unsigned j, unsigned i) {
  static Memo<std::pair<unsigned, unsigned>, LaurentPoly> memo;
  return memo.get({j, i}, [j, i] {
    if (j == 0) return i == 0 ? LaurentPoly::constant(1) : LaurentPoly();
    LaurentPoly acc;
    for (unsigned b = 0; b <= i; ++b) acc += p_power_component(j - 1, i - b) * pprime_poly(b).poly();
    return acc;
  });
}

CoactionElement eta_L_cp(unsigned k) {
  std::map<unsigned, LaurentPoly> terms;
  for (unsigned j = 0; j <= k; ++j) {
    // t^j on the right becomes v^j on the left.
    LaurentPoly a = p_power_component(j, k - j) * v_pow(j);
    if (!a.is_zero()) terms.emplace(j, a);
  }
  return CoactionElement(std::move(terms));
}

BetaPoly coaction_counit(const CoactionElement& x) {
  BetaPoly out;
  for (const auto& [j, a] : x.terms()) {
    const HatScalar e = epsilon(KKElement(a));
    for (const auto& [exp, c] : e.terms()) out += BetaPoly::term(c, exp, j);
  }
  return out;
}

KKElement composite_hat(unsigned k) {
  if (k == 0) throw Error("composite_hat needs k >= 1");
  LaurentPoly out;
  const CoactionElement coaction = eta_L_cp(k);
  for (const auto& [j, a] : coaction.terms()) {
    const HatScalar e = augment_hat(BetaPoly::beta(j));
    for (const auto& [exp, c] : e.terms()) out += a * v_pow(exp) * Rational(c);
  }
  return KKElement(out);
}

}  // namespace tk
