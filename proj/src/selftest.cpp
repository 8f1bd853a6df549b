#include "tk/selftest.hpp"

#include "tk/cp_ring.hpp"
#include "tk/errors.hpp"
#include "tk/kk.hpp"
#include "tk/linalg.hpp"
#include "tk/samples.hpp"
#include "tk/tor.hpp"
#include "tk/twist.hpp"

#include <sstream>

namespace tk {

namespace {

AxiomCheck fail(AxiomCheck c, std::string counterexample) {
  c.pass = false;
  c.counterexample = std::move(counterexample);
  return c;
}

std::string matrix_text(const IntMatrix& a) {
  std::ostringstream out;
  out << "[";
  for (Index i = 0; i < a.rows(); ++i) {
    out << (i ? "; " : "");
    for (Index j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
  }
  out << "]";
  return out.str();
}

Presentation cyclic(int n) {
  Presentation p;
  p.generators = {{"x", 0}};
  p.relations = {{{0, BetaPoly::term(n, 0, 1)}}};
  return p;
}

}  // namespace

SelftestOptions normal_depth() { return SelftestOptions{}; }

SelftestOptions deep_depth() {
  SelftestOptions o;
  o.degree = 10;
  o.fgl_order = 12;
  o.samples = 400;
  return o;
}

AxiomCheck fgl_suite(unsigned order, const StructureConstants& constants) {
  AxiomCheck c{"formal group law: b(s)b(t) = b(s+t+st), b(s)^m = b([m](s)) for m <= 6", true, {}, 0};
  const auto product = fgl_product_identity_check(order, constants);
  ++c.cases;
  if (!product.pass) return fail(c, product.identity + ": " + product.counterexample);
  const unsigned power_order = order > 2 ? order - 2 : order;
  for (unsigned m = 2; m <= 6; ++m) {
    const auto r = fgl_identity_check(m, power_order, constants);
    ++c.cases;
    if (!r.pass) return fail(c, r.identity + ": " + r.counterexample);
  }
  return c;
}

AxiomCheck truncation_suite(unsigned max_truncation, const StructureConstants& constants) {
  AxiomCheck c{"truncated rings are associative and augmented", true, {}, 0};
  for (unsigned d = 1; d <= max_truncation; ++d) {
    try {
      const TruncRing ring(d, constants);
      for (unsigned i = 1; i <= d; ++i)
        for (unsigned j = i; j <= d; ++j)
          for (unsigned k = j; k <= d; ++k) {
            ++c.cases;
            const BetaPoly a = BetaPoly::beta(i), b = BetaPoly::beta(j), e = BetaPoly::beta(k);
            const BetaPoly l = ring.multiply(ring.multiply(a, b), e), r = ring.multiply(a, ring.multiply(b, e));
            if (!(l == r))
              return fail(c, "D=" + std::to_string(d) + ": (b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                                 std::to_string(k) + " = " + l.str() + " but b" + std::to_string(i) + " (b" +
                                 std::to_string(j) + " b" + std::to_string(k) + ") = " + r.str());
          }
    } catch (const ConsistencyError& e) {
      return fail(c, "D=" + std::to_string(d) + ": " + e.what());
    }
  }
  return c;
}

AxiomCheck composite_hat_suite(unsigned max_k) {
  AxiomCheck c{"eta_L then augmentation sends t^k b_k to p_k", true, {}, 0};
  for (unsigned k = 1; k <= max_k; ++k) {
    ++c.cases;
    const KKElement got = composite_hat(k);
    if (!(got == p_poly(k))) return fail(c, "k=" + std::to_string(k) + ": " + got.str() + " != " + p_poly(k).str());
  }
  return c;
}

AxiomCheck i_star_suite(unsigned max_k) {
  AxiomCheck c{"decompose(i_star(t^k b_k)) = p_k", true, {}, 0};
  for (unsigned k = 1; k <= max_k; ++k) {
    ++c.cases;
    const Decomposition d = decompose(i_star(BetaPoly::term(1, k, k)));
    if (d != Decomposition{{k, LaurentPoly::constant(1)}})
      return fail(c, "k=" + std::to_string(k) + ": " + decomposition_text(d));
  }
  return c;
}

AxiomCheck membership_suite(std::mt19937& rng, std::size_t samples, unsigned range) {
  AxiomCheck c{"membership agrees with sampling f(t, kt), |k| <= " + std::to_string(range), true, {}, 0};
  std::size_t members = 0;
  const LaurentPoly t = LaurentPoly::variable("t");
  for (std::size_t n = 0; n < samples; ++n) {
    const KKElement f = random_kk_candidate(rng);
    ++c.cases;
    const Membership m = membership(f);
    const auto sampled = sampled_failure(f, range);
    if (m.member && sampled) return fail(c, f.str() + ": decided member, sampling fails at " + sampled->str());
    if (!m.member && !sampled) return fail(c, f.str() + ": decided non-member, sampling finds no failure");
    if (m.member) {
      ++members;
      const LaurentPoly back = recombine(decompose(f));
      if (!(back == f.poly())) return fail(c, f.str() + ": decompose recombines to " + back.str());
      continue;
    }
    if (!m.witness) return fail(c, f.str() + ": non-member without witness");
    const Witness& w = *m.witness;
    const auto coeffs = univariate_coefficients(substitute(f.poly(), {{"u", t}, {"v", t * Rational(w.k)}}), "t");
    const auto it = coeffs.find(w.degree);
    if (it == coeffs.end() || it->second != w.coefficient || primes_divide(denominator(w.coefficient), abs(w.k)))
      return fail(c, f.str() + ": witness does not fail: " + w.str());
  }
  c.name += " (" + std::to_string(members) + " members, " + std::to_string(samples - members) + " non-members)";
  return c;
}

AxiomCheck snf_suite(std::mt19937& rng, std::size_t trials, Index max_dim, int bound) {
  AxiomCheck c{"Smith normal form: U A V = S, unimodular, divisibility chain, |det|", true, {}, 0};
  std::uniform_int_distribution<Index> dim(1, max_dim);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Index m = dim(rng), n = trial % 3 == 0 ? m : dim(rng);
    IntMatrix a = random_matrix(rng, m, n, bound);
    if (trial % 7 == 0 && m > 1) a.row(m - 1) = a.row(0) * 3;
    ++c.cases;
    const auto f = smith_normal_form(a);
    const std::string where = "A = " + matrix_text(a);
    if (f.U * a * f.V != f.S) return fail(c, where + ": U A V != S");
    for (Index i = 0; i < f.S.rows(); ++i)
      for (Index j = 0; j < f.S.cols(); ++j)
        if (i != j && f.S(i, j) != 0) return fail(c, where + ": S is not diagonal");
    if (abs(determinant(f.U)) != 1 || abs(determinant(f.V)) != 1) return fail(c, where + ": transform not unimodular");
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      const bool chain = d[i] >= 0 && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0);
      if (!chain) return fail(c, where + ": divisibility chain broken at " + std::to_string(i));
    }
    if (m == n) {
      const Integer det = determinant(a);
      Integer prod = 1;
      for (const auto& x : d) prod *= x;
      if (det != 0 && prod != abs(det)) return fail(c, where + ": product of invariant factors != |det|");
    }
  }
  return c;
}

AxiomCheck injectivity_suite(std::mt19937& rng, std::size_t samples, unsigned max_i) {
  AxiomCheck c{"b_i x != 0 with leading coefficient binom(i + j, i) top(x)", true, {}, 0};
  std::uniform_int_distribution<unsigned> pick(1, max_i);
  for (std::size_t n = 0; n < samples; ++n) {
    const BetaPoly x = random_beta_poly(rng, 8);
    const unsigned i = pick(rng);
    ++c.cases;
    if (!injectivity_witness(i, x)) return fail(c, "i=" + std::to_string(i) + ", x = " + x.str());
  }
  return c;
}

std::vector<std::pair<std::string, Presentation>> presentation_catalog() {
  std::vector<std::pair<std::string, Presentation>> out;
  for (int n = 1; n <= 12; ++n) out.emplace_back("cyclic n=" + std::to_string(n), cyclic(n));
  Presentation all;
  all.generators = {{"x", 0}};
  for (unsigned i = 1; i <= 8; ++i) all.relations.push_back({{0, BetaPoly::beta(i)}});
  out.emplace_back("all b_i killed", all);
  Presentation free;
  free.generators = {{"x", 0}, {"y", 0}, {"z", 1}};
  out.emplace_back("free, ranks 2 and 1", free);
  Presentation mixed;
  mixed.truncation = 4;
  mixed.generators = {{"x", 0}, {"y", 1}, {"z", 0}};
  mixed.relations = {{{0, parse_beta_poly("2 b1")}, {2, parse_beta_poly("4 + b2")}},
                     {{1, parse_beta_poly("6 t^2 b1 - 3 b3")}},
                     {{0, parse_beta_poly("3 b2 - 1")}, {2, parse_beta_poly("t b4")}}};
  out.emplace_back("mixed parities", mixed);
  out.emplace_back("empty", Presentation{});
  return out;
}

AxiomCheck tor0_suite() {
  AxiomCheck c{"Tor_0 = twisted K in free and relative modes", true, {}, 0};
  for (const auto& [name, p] : presentation_catalog()) {
    ++c.cases;
    const GradedGroup expected = twisted_k(p);
    // Tor_0 only needs the indices present; keep the relative stage small.
    const unsigned d = std::max(1u, p.max_index());
    for (auto mode : {ResolutionMode::free, ResolutionMode::relative}) {
      const GradedGroup got = tor(p, 0, mode, d)[0];
      if (!(got == expected))
        return fail(c, name + " (" + (mode == ResolutionMode::free ? "free" : "relative") + "): Tor_0 = " + got.str() +
                           ", twisted K = " + expected.str());
    }
  }
  return c;
}

std::vector<AxiomCheck> run_selftest(const SelftestOptions& options) {
  std::mt19937 rng(options.seed);
  std::vector<AxiomCheck> out;
  out.push_back(fgl_suite(options.fgl_order, options.constants));
  out.push_back(truncation_suite(6, options.constants));
  for (auto& c : hopf_axiom_suite(options.degree).checks) out.push_back(std::move(c));
  out.push_back(composite_hat_suite(options.degree + 2));
  out.push_back(i_star_suite(options.degree + 2));
  out.push_back(membership_suite(rng, options.samples, 25));
  out.push_back(snf_suite(rng, options.samples / 2, 12, 100));
  out.push_back(injectivity_suite(rng, options.samples / 2, 6));
  out.push_back(tor0_suite());
  return out;
}

}  // namespace tk
