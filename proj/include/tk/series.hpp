// Truncated multivariate power series, templated on the coefficient ring.
#pragma once

#include "tk/errors.hpp"
#include "tk/laurent.hpp"
#include "tk/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tk {

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

inline std::string coefficient_text(const Integer& x) { return to_string(x); }
inline std::string coefficient_text(const Rational& x) { return to_string(x); }

/// Series in sorted variables with nonnegative exponents; every term of
/// total degree above `order` is discarded on construction and after each
/// product. `Scalar` needs +, *, unary -, construction from int, and the
/// free functions is_zero / coefficient_text.
template <typename Scalar>
class TruncSeries {
 public:
  using Exponents = std::vector<std::int64_t>;
  using Terms = std::map<Exponents, Scalar>;

  TruncSeries(std::vector<std::string> variables, unsigned order)
      : vars_(std::move(variables)), order_(order) {
    std::sort(vars_.begin(), vars_.end());
  }

  /// `terms` follow the sorted `variables`.
  TruncSeries(std::vector<std::string> variables, unsigned order, const Terms& terms)
      : TruncSeries(std::move(variables), order) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static TruncSeries variable(const std::string& name, unsigned order) {
    TruncSeries s({name}, order);
    s.add_term({1}, Scalar(1));
    return s;
  }

  static TruncSeries constant(std::vector<std::string> variables, unsigned order, const Scalar& c) {
    TruncSeries s(std::move(variables), order);
    s.add_term(Exponents(s.vars_.size(), 0), c);
    return s;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Scalar constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

  /// Coefficientwise image in another scalar ring, Eigen-style.
  template <typename Other>
  TruncSeries<Other> cast() const {
    TruncSeries<Other> out(vars_, order_);
    for (const auto& [e, c] : terms_) out.add_term(e, Other(c));
    return out;
  }

  TruncSeries embed(const std::vector<std::string>& variables) const {
    auto target = variables;
    std::sort(target.begin(), target.end());
    if (target == vars_) return *this;
    std::vector<std::size_t> position(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
      if (it == target.end() || *it != vars_[i]) throw Error("series embed: missing variable " + vars_[i]);
      position[i] = static_cast<std::size_t>(it - target.begin());
    }
    TruncSeries out(target, order_);
    for (const auto& [e, c] : terms_) {
      Exponents f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[position[i]] = e[i];
      out.add_term(f, c);
    }
    return out;
  }

  TruncSeries with_order(unsigned order) const {
    TruncSeries out(vars_, order);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  TruncSeries operator-() const {
    TruncSeries out(vars_, order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    auto [x, y] = align(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    auto [x, y] = align(a, b);
    TruncSeries out(x.vars_, x.order_);
    Exponents e(x.vars_.size());
    for (const auto& [ea, ca] : x.terms_) {
      const std::int64_t da = total(ea);
      for (const auto& [eb, cb] : y.terms_) {
        if (da + total(eb) > static_cast<std::int64_t>(out.order_)) continue;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend TruncSeries operator*(const Scalar& c, const TruncSeries& a) {
    TruncSeries out(a.vars_, a.order_);
    for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
    return out;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    auto [x, y] = align(a, b);
    return x.terms_ == y.terms_;
  }

  /// Compact text: `3s + 3s^2 + s^3`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Sort by total degree, then lexicographically.
    std::vector<const typename Terms::value_type*> items;
    for (const auto& kv : terms_) items.push_back(&kv);
    std::stable_sort(items.begin(), items.end(),
                     [](auto* p, auto* q) { return total(p->first) < total(q->first); });
    for (const auto* kv : items) {
      const auto& [e, c] = *kv;
      std::string coeff = coefficient_text(c);
      bool negative = !coeff.empty() && coeff[0] == '-' && is_atomic(coeff.substr(1));
      if (negative) coeff = coeff.substr(1);
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << '-';
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mono += vars_[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        os << coeff;
      } else {
        if (coeff != "1") os << (is_atomic(coeff) ? coeff : "(" + coeff + ")");
        os << mono;
      }
    }
    return os.str();
  }

  template <typename>
  friend class TruncSeries;

 private:
  static std::int64_t total(const Exponents& e) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  static bool is_atomic(const std::string& s) {
    return s.find_first_of(" +") == std::string::npos && s.find('-', 1) == std::string::npos;
  }

  static std::pair<TruncSeries, TruncSeries> align(const TruncSeries& a, const TruncSeries& b) {
    auto vars = merge_variables(a.vars_, b.vars_);
    unsigned order = std::min(a.order_, b.order_);
    return {a.embed(vars).with_order(order), b.embed(vars).with_order(order)};
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != vars_.size()) throw Error("series term arity mismatch");
    std::int64_t d = 0;
    for (auto x : e) {
      if (x < 0) throw Error("series exponents must be nonnegative");
      d += x;
    }
    if (d > static_cast<std::int64_t>(order_) || tk::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (tk::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  unsigned order_;
  Terms terms_;
};

/// outer(inner): `outer` is univariate; `inner` must have zero constant
/// term (CompositionWithUnit otherwise). Exact through min of the orders.
template <typename Scalar>
TruncSeries<Scalar> compose(const TruncSeries<Scalar>& outer, const TruncSeries<Scalar>& inner) {
  if (outer.variables().size() > 1) throw Error("compose: outer series must be univariate");
  if (!is_zero(inner.constant_term()))
    throw CompositionWithUnit("compose: inner series has a nonzero constant term");
  const unsigned order = std::min(outer.order(), inner.order());
  const auto& vars = inner.variables();
  TruncSeries<Scalar> result(vars, order);
  TruncSeries<Scalar> power = TruncSeries<Scalar>::constant(vars, order, Scalar(1));
  const TruncSeries<Scalar> x = inner.with_order(order);
  for (unsigned k = 0; k <= order; ++k) {
    typename TruncSeries<Scalar>::Exponents e(outer.variables().size(), k);
    if (outer.variables().empty() && k > 0) break;
    Scalar c = outer.coefficient(e);
    if (!is_zero(c)) result = result + c * power;
    power = power * x;
  }
  return result;
}

}  // namespace tk
