#include "tk/laurent.hpp"

#include "tk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tk {

namespace {

void add_into(LaurentPoly::Terms& terms, const LaurentPoly::Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::string> variables, const Terms& terms) {
  std::vector<std::size_t> order(variables.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return variables[i] < variables[j]; });
  LaurentPoly out;
  out.vars_.reserve(variables.size());
  for (std::size_t i : order) out.vars_.push_back(variables[i]);
  if (std::adjacent_find(out.vars_.begin(), out.vars_.end()) != out.vars_.end())
    throw Error("duplicate variable name");
  for (const auto& [e, c] : terms) {
    if (e.size() != variables.size()) throw Error("exponent tuple does not match variables");
    Exponents sorted(e.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = e[order[k]];
    add_into(out.terms_, sorted, c);
  }
  return out;
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
  LaurentPoly out;
  if (c != 0) out.terms_.emplace(Exponents{}, c);
  return out;
}

LaurentPoly LaurentPoly::variable(const std::string& name, std::int64_t exponent) {
  return monomial({name}, {exponent}, 1);
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& variables,
                                  const Exponents& exponents, const Rational& c) {
  return from_terms(variables, {{exponents, c}});
}

int LaurentPoly::index_of(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return -1;
  return static_cast<int>(it - vars_.begin());
}

Rational LaurentPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::coefficient(const std::map<std::string, std::int64_t>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, exp] : monomial) {
    int idx = index_of(name);
    if (idx < 0) {
      if (exp != 0) return 0;
      continue;
    }
    e[idx] = exp;
  }
  return coefficient(e);
}

LaurentPoly LaurentPoly::embed(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<std::string> target = variables;
  std::sort(target.begin(), target.end());
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
    if (it == target.end() || *it != vars_[i])
      throw Error("embed: variable '" + vars_[i] + "' missing from target context");
    position[i] = static_cast<std::size_t>(it - target.begin());
  }
  LaurentPoly out;
  out.vars_ = std::move(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[position[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::compact() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  LaurentPoly out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) out.vars_.push_back(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponents f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) f.push_back(e[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::int64_t LaurentPoly::min_exponent(const std::string& name) const {
  int idx = index_of(name);
  if (idx < 0 || terms_.empty()) return 0;
  std::int64_t m = terms_.begin()->first[idx];
  for (const auto& [e, c] : terms_) m = std::min(m, e[idx]);
  return m;
}

std::int64_t LaurentPoly::max_exponent(const std::string& name) const {
  int idx = index_of(name);
  if (idx < 0 || terms_.empty()) return 0;
  std::int64_t m = terms_.begin()->first[idx];
  for (const auto& [e, c] : terms_) m = std::max(m, e[idx]);
  return m;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return false;
  return true;
}

bool LaurentPoly::is_homogeneous(std::int64_t degree) const {
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (auto x : e) d = checked_add(d, x);
    if (d != degree) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  auto vars = merge_variables(vars_, other.vars_);
  if (vars != vars_) *this = embed(vars);
  const LaurentPoly& rhs = other.vars_ == vars ? other : other.embed(vars);
  for (const auto& [e, c] : rhs.terms_) add_into(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  auto vars = merge_variables(a.vars_, b.vars_);
  const LaurentPoly lhs = a.embed(vars);
  const LaurentPoly rhs = b.embed(vars);
  LaurentPoly out;
  out.vars_ = vars;
  LaurentPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      add_into(out.terms_, e, ca * cb);
    }
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = merge_variables(a.vars_, b.vars_);
  return a.embed(vars).terms_ == b.embed(vars).terms_;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (mag != 1 || constant) {
      os << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& f, std::int64_t n) {
  if (n < 0) {
    if (!f.is_monomial()) throw NonInvertibleSubstitution("negative power of a non-unit: " + f.str());
    const auto& [e, c] = *f.terms().begin();
    LaurentPoly::Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return pow(LaurentPoly::monomial(f.variables(), inv, Rational(1) / c), -n);
  }
  LaurentPoly result = LaurentPoly::constant(1);
  LaurentPoly base = f;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly substitute(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& assignment) {
  const auto& vars = f.variables();
  std::vector<LaurentPoly> images;
  images.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = assignment.find(v);
    images.push_back(it == assignment.end() ? LaurentPoly::variable(v) : it->second);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (f.min_exponent(vars[i]) < 0 && !images[i].is_monomial())
      throw NonInvertibleSubstitution("variable '" + vars[i] +
                                      "' occurs with a negative exponent but is sent to the non-unit " +
                                      images[i].str());
  }
  // Powers are cached per (variable, exponent).
  std::vector<std::map<std::int64_t, LaurentPoly>> cache(vars.size());
  auto power = [&](std::size_t i, std::int64_t n) -> const LaurentPoly& {
    auto it = cache[i].find(n);
    if (it != cache[i].end()) return it->second;
    return cache[i].emplace(n, pow(images[i], n)).first->second;
  };
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

LaurentPoly rename(const LaurentPoly& f, const std::map<std::string, std::string>& names) {
  std::map<std::string, LaurentPoly> assignment;
  for (const auto& [from, to] : names) assignment.emplace(from, LaurentPoly::variable(to));
  return substitute(f, assignment);
}

std::map<std::int64_t, LaurentPoly> homogeneous_components(const LaurentPoly& f) {
  std::map<std::int64_t, LaurentPoly::Terms> buckets;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t d = 0;
    for (auto x : e) d = checked_add(d, x);
    buckets[d].emplace(e, c);
  }
  std::map<std::int64_t, LaurentPoly> out;
  for (auto& [d, terms] : buckets) out.emplace(d, LaurentPoly::from_terms(f.variables(), terms));
  return out;
}

std::map<std::int64_t, Rational> univariate_coefficients(const LaurentPoly& f,
                                                         const std::string& name) {
  const LaurentPoly g = f.compact();
  if (g.variables().size() > 1 || (g.variables().size() == 1 && g.variables()[0] != name))
    throw Error("expected a polynomial in the single variable '" + name + "', got " + f.str());
  std::map<std::int64_t, Rational> out;
  for (const auto& [e, c] : g.terms()) out.emplace(e.empty() ? 0 : e[0], c);
  return out;
}

}  // namespace tk
