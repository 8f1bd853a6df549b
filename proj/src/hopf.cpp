#include "tk/hopf.hpp"

#include "tk/kk.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace tk {

bool HopfReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

namespace {

/// Runs `property` on every sample; it returns an empty string on success
/// and a description of both sides otherwise.
template <typename Sample>
AxiomCheck check(std::string name, const std::vector<Sample>& samples,
                 const std::function<std::string(const Sample&)>& property) {
  AxiomCheck out{std::move(name), true, {}, samples.size()};
  for (const auto& x : samples) {
    std::string failure = property(x);
    if (!failure.empty()) {
      out.pass = false;
      out.counterexample = std::move(failure);
      break;
    }
  }
  return out;
}

std::string mismatch(const std::string& element, const std::string& lhs, const std::string& rhs) {
  return element + ": " + lhs + " != " + rhs;
}

std::vector<KKElement> samples(unsigned max_degree) {
  std::vector<KKElement> out;
  for (unsigned i = 0; i <= max_degree; ++i) out.push_back(p_poly(i));
  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> idx(0, static_cast<int>(max_degree)), texp(-3, 3), coef(-4, 4), vneg(0, 2);
  for (int n = 0; n < 12; ++n) {
    BetaPoly x;
    for (int term = 0; term < 3; ++term) x += BetaPoly::term(coef(rng), texp(rng), static_cast<unsigned>(idx(rng)));
    // v is a unit in K_*K, so v^-a times an image element stays integral.
    out.push_back(KKElement(i_star(x).poly() * LaurentPoly::monomial({"u", "v"}, {0, -vneg(rng)}, 1)));
  }
  return out;
}

LaurentPoly z(unsigned j, std::int64_t e = 1) { return LaurentPoly::variable(chain_variable(j), e); }

/// A coaction coefficient in (u, v) moved to chain variables (a, b).
LaurentPoly on_chain(const LaurentPoly& f, unsigned a, unsigned b) {
  return rename(f, {{"u", chain_variable(a)}, {"v", chain_variable(b)}});
}

}  // namespace

HopfReport hopf_axiom_suite(unsigned max_degree) {
  HopfReport report;
  const auto xs = samples(max_degree);
  using Fn = std::function<std::string(const KKElement&)>;

  report.checks.push_back(check<KKElement>("counit: (eps (x) 1) psi = id = (1 (x) eps) psi", xs, Fn([](const KKElement& f) {
    const auto c = coproduct(f);
    const auto l = counit_left(c), r = counit_right(c);
    if (!(l == f)) return mismatch(f.str(), l.str(), f.str());
    if (!(r == f)) return mismatch(f.str(), r.str(), f.str());
    return std::string();
  })));

  report.checks.push_back(check<KKElement>("coassociativity: (psi (x) 1) psi = (1 (x) psi) psi", xs, Fn([](const KKElement& f) {
    const auto c = coproduct(f);
    const auto l = coproduct_left(c), r = coproduct_right(c);
    return l == r ? std::string() : mismatch(f.str(), l.poly.str(), r.poly.str());
  })));

  report.checks.push_back(check<KKElement>("conjugation is an involution", xs, Fn([](const KKElement& f) {
    const auto cc = conjugate(conjugate(f));
    return cc == f ? std::string() : mismatch(f.str(), cc.str(), f.str());
  })));

  report.checks.push_back(check<KKElement>("eps c = eps", xs, Fn([](const KKElement& f) {
    const auto l = epsilon(conjugate(f)), r = epsilon(f);
    return l == r ? std::string() : mismatch(f.str(), l.str(), r.str());
  })));

  report.checks.push_back(check<KKElement>("conjugation preserves integrality", xs, Fn([](const KKElement& f) {
    return is_integral(conjugate(f)) ? std::string() : f.str() + ": conjugate is not integral";
  })));

  const std::vector<std::pair<std::string, std::string>> generators = {{"u", "v"}, {"v", "u"}};
  report.checks.push_back(check<std::pair<std::string, std::string>>(
      "c(u) = v, c(v) = u", generators, [](const std::pair<std::string, std::string>& g) {
        const auto image = conjugate(KKElement(LaurentPoly::variable(g.first)));
        return image == KKElement(LaurentPoly::variable(g.second)) ? std::string()
                                                                   : mismatch("c(" + g.first + ")", image.str(), g.second);
      }));

  std::vector<unsigned> indices;
  for (unsigned i = 1; i <= max_degree; ++i) indices.push_back(i);
  using IndexFn = std::function<std::string(const unsigned&)>;

  report.checks.push_back(check<unsigned>("eps(p_1) = t, eps(p_i) = 0 for i > 1", indices, IndexFn([](const unsigned& i) {
    const auto e = epsilon(p_poly(i));
    const HatScalar expected = i == 1 ? HatScalar::monomial(1, 1) : HatScalar();
    return e == expected ? std::string() : mismatch("eps(p_" + std::to_string(i) + ")", e.str(), expected.str());
  })));

  report.checks.push_back(check<unsigned>("coaction counitarity: (eps (x) 1) eta_L(t^k b_k) = t^k b_k", indices,
                                          IndexFn([](const unsigned& k) {
    const auto l = coaction_counit(eta_L_cp(k));
    const auto r = BetaPoly::term(1, k, k);
    return l == r ? std::string() : mismatch("k=" + std::to_string(k), l.str(), r.str());
  })));

  report.checks.push_back(check<unsigned>("coaction coassociativity: (psi (x) 1) eta_L = (1 (x) eta_L) eta_L", indices,
                                          IndexFn([](const unsigned& k) {
    // eta_L(t^k b_k) = sum_j A_j (x) b_j with A_j = a_j v^j; applying
    // eta_L again to t^j b_j = v^j-weighted b_j uses the middle variable.
    const auto outer = eta_L_cp(k);
    std::map<unsigned, LaurentPoly> rhs;
    for (const auto& [j, a] : outer.terms()) {
      const LaurentPoly left = on_chain(a, 0, 1) * z(1, -static_cast<std::int64_t>(j));
      const auto inner = eta_L_cp(j);
      for (const auto& [b, c] : inner.terms()) rhs[b] += left * on_chain(c, 1, 2);
    }
    for (const auto& [b, a] : outer.terms()) {
      const LaurentPoly lhs = on_chain(a, 0, 2);
      if (!(lhs == rhs[b]))
        return mismatch("k=" + std::to_string(k) + ", b" + std::to_string(b), lhs.str(), rhs[b].str());
      rhs.erase(b);
    }
    for (const auto& [b, c] : rhs)
      if (!c.is_zero()) return mismatch("k=" + std::to_string(k) + ", b" + std::to_string(b), "0", c.str());
    return std::string();
  })));

  return report;
}

}  // namespace tk
