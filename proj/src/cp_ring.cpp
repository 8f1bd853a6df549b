#include "tk/cp_ring.hpp"

#include "tk/errors.hpp"

#include <sstream>

namespace tk {

// ---- HatScalar -------------------------------------------------------------

HatScalar HatScalar::monomial(const Integer& c, std::int64_t exponent) {
  HatScalar h;
  h.add(exponent, c);
  return h;
}

void HatScalar::add(std::int64_t e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer HatScalar::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

HatScalar& HatScalar::operator+=(const HatScalar& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

HatScalar operator*(const HatScalar& a, const HatScalar& b) {
  HatScalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(checked_add(ea, eb), ca * cb);
  return out;
}

std::string HatScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) os << 't';
    if (e != 0 && e != 1) os << '^' << e;
  }
  return os.str();
}

// ---- series identities -----------------------------------------------------

TruncSeries<Integer> n_series(unsigned n, unsigned order, const std::string& variable) {
  const auto s = TruncSeries<Integer>::variable(variable, order);
  TruncSeries<Integer> acc({variable}, order);
  for (unsigned k = 1; k <= n; ++k) acc = acc + s + s * acc;
  return acc;
}

TruncSeries<BetaPoly> beta_series(const std::string& variable, unsigned order) {
  TruncSeries<BetaPoly>::Terms terms;
  for (unsigned i = 0; i <= order; ++i) terms.emplace(TruncSeries<BetaPoly>::Exponents{i}, BetaPoly::beta(i));
  return TruncSeries<BetaPoly>({variable}, order, terms);
}

namespace {

/// Series product whose coefficient products go through `constants`.
TruncSeries<BetaPoly> product(const TruncSeries<BetaPoly>& a, const TruncSeries<BetaPoly>& b,
                              const StructureConstants& constants) {
  auto vars = merge_variables(a.variables(), b.variables());
  const unsigned order = std::min(a.order(), b.order());
  const auto x = a.embed(vars);
  const auto y = b.embed(vars);
  std::map<TruncSeries<BetaPoly>::Exponents, BetaPoly> acc;
  for (const auto& [ea, ca] : x.terms())
    for (const auto& [eb, cb] : y.terms()) {
      TruncSeries<BetaPoly>::Exponents e(vars.size());
      std::int64_t d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) d += e[i] = ea[i] + eb[i];
      if (d > static_cast<std::int64_t>(order)) continue;
      acc[e] += multiply(ca, cb, constants);
    }
  return TruncSeries<BetaPoly>(vars, order, acc);
}

/// sum_k b_k g^k with integer series g (no b-products are involved).
TruncSeries<BetaPoly> beta_of(const TruncSeries<Integer>& g) {
  return compose(beta_series("r", g.order()), g.cast<BetaPoly>());
}

std::string monomial_text(const std::vector<std::string>& vars, const std::vector<std::int64_t>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

IdentityReport compare(const std::string& name, const TruncSeries<BetaPoly>& lhs,
                       const TruncSeries<BetaPoly>& rhs) {
  IdentityReport report{true, name, {}};
  const auto diff = lhs - rhs;
  if (diff.is_zero()) return report;
  // First differing coefficient by total degree, then lexicographically.
  const auto* best = &*diff.terms().begin();
  auto total = [](const auto& e) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  for (const auto& kv : diff.terms())
    if (total(kv.first) < total(best->first)) best = &kv;
  report.pass = false;
  report.counterexample = "coefficient of " + monomial_text(diff.variables(), best->first) +
                          ": lhs = " + lhs.coefficient(best->first).str() +
                          ", rhs = " + rhs.coefficient(best->first).str();
  return report;
}

}  // namespace

IdentityReport fgl_identity_check(unsigned m, unsigned order, const StructureConstants& constants) {
  const auto b = beta_series("s", order);
  auto lhs = TruncSeries<BetaPoly>::constant({"s"}, order, BetaPoly(1));
  for (unsigned k = 0; k < m; ++k) lhs = product(lhs, b, constants);
  const auto rhs = beta_of(n_series(m, order, "s"));
  return compare("b(s)^" + std::to_string(m) + " = b([" + std::to_string(m) + "](s)) through order " +
                     std::to_string(order),
                 lhs, rhs);
}

IdentityReport fgl_product_identity_check(unsigned order, const StructureConstants& constants) {
  const auto lhs = product(beta_series("s", order), beta_series("t", order), constants);
  const auto s = TruncSeries<Integer>::variable("s", order);
  const auto t = TruncSeries<Integer>::variable("t", order);
  const auto rhs = beta_of(s + t + s * t);
  return compare("b(s)b(t) = b(s+t+st) through order " + std::to_string(order), lhs, rhs);
}

// ---- TruncRing ---------------------------------------------------------------

TruncRing::TruncRing(unsigned truncation, const StructureConstants& constants) : d_(truncation) {
  if (truncation < 1) throw ValidationError("truncation index must be at least 1");
  const unsigned r = rank();
  table_.resize(static_cast<std::size_t>(r) * r * r);
  for (unsigned k = 0; k < r; ++k)
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) table_[(k * r + i) * r + j] = constants(k, i, j);

  // Products never lower the index, so the span of b_{>D} is an ideal.
  for (unsigned i = 0; i <= 2 * d_ + 1; ++i)
    for (unsigned j = 0; j <= 2 * d_ + 1; ++j)
      for (unsigned k = 0; k < std::max(i, j); ++k)
        if (constants(k, i, j) != 0)
          throw ConsistencyError("structure constant c^" + std::to_string(k) + "_{" + std::to_string(i) + "," +
                                 std::to_string(j) + "} violates the support condition");
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      for (unsigned k = 0; k < r; ++k)
        if (constant(k, i, j) != constant(k, j, i)) throw ConsistencyError("structure constants not symmetric");
  for (unsigned j = 0; j < r; ++j)
    if (constant(j, 0, j) != 1) throw ConsistencyError("b_0 does not act as the unit");

  // The augmentation must stay multiplicative on the truncation.
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) {
      Integer image = 0;
      for (unsigned k = 0; k < 2 && k < r; ++k) image += constant(k, i, j);
      if (image != Integer(i <= 1 && j <= 1 ? 1 : 0))
        throw ConsistencyError("augmentation is not multiplicative on b" + std::to_string(i) + " b" +
                               std::to_string(j));
    }

  actions_.reserve(r);
  for (unsigned k = 0; k < r; ++k) {
    IntMatrix a = IntMatrix::Zero(r, r);
    for (unsigned j = 0; j < r; ++j)
      for (unsigned l = 0; l < r; ++l) a(l, j) = constant(l, k, j);
    actions_.push_back(std::move(a));
  }
  augmentation_ = Eigen::Matrix<Integer, 1, Eigen::Dynamic>::Zero(r);
  augmentation_(0) = 1;
  augmentation_(1) = 1;
}

BetaPoly TruncRing::multiply(const BetaPoly& x, const BetaPoly& y) const {
  BetaPoly::Terms acc;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      if (kx.second > d_ || ky.second > d_) continue;
      const std::int64_t m = checked_add(kx.first, ky.first);
      for (unsigned k = std::max(kx.second, ky.second); k <= d_; ++k) {
        const Integer& c = constant(k, kx.second, ky.second);
        if (c != 0) acc[{m, k}] += cx * cy * c;
      }
    }
  return BetaPoly::from_terms(acc);
}

IntVector TruncRing::multiply(const IntVector& x, const IntVector& y) const { return action(x) * y; }

IntMatrix TruncRing::action(const IntVector& x) const {
  IntMatrix a = IntMatrix::Zero(rank(), rank());
  for (unsigned k = 0; k < rank(); ++k)
    if (x(k) != 0) a += x(k) * actions_[k];
  return a;
}

IntVector TruncRing::coordinates(const BetaPoly& x) const {
  IntVector v = IntVector::Zero(rank());
  for (const auto& [key, c] : x.terms()) {
    if (key.second > d_)
      throw MalformedPresentation("beta index " + std::to_string(key.second) + " exceeds truncation " +
                                  std::to_string(d_));
    v(key.second) += c;
  }
  return v;
}

// ---- augmentation and injectivity -----------------------------------------

HatScalar augment_hat(const BetaPoly& x) {
  HatScalar out;
  for (const auto& [key, c] : x.terms())
    if (key.second <= 1) out += HatScalar::monomial(c, key.first);
  return out;
}

bool injectivity_witness(unsigned i, const BetaPoly& x) {
  if (x.is_zero()) throw ZeroInput("injectivity_witness: x must be nonzero");
  const BetaPoly prod = multiply(BetaPoly::beta(i), x);
  const unsigned top = x.max_index();
  const Integer lead = binomial(i + top, i);
  for (const auto& [key, c] : x.terms()) {
    if (key.second != top) continue;
    if (prod.coefficient(key.first, i + top) != lead * c) return false;
  }
  return !prod.is_zero();
}

}  // namespace tk
