#include "tk/errors.hpp"
#include "tk/expr_parser.hpp"
#include "tk/kk.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tk;

namespace {

LaurentPoly P(const std::string& s) { return parse_expression(s, {"u", "v"}); }
KKElement K(const std::string& s) { return KKElement(P(s)); }

// Oracle for membership: f(t, kt) must lie in Z[t^{+-1}, 1/k] for every
// k != 0; brute force over a range of k.
bool brute_force_member(const LaurentPoly& f, int range) {
  const LaurentPoly t = LaurentPoly::variable("t");
  for (int k = -range; k <= range; ++k) {
    if (k == 0) continue;
    const auto g = substitute(f, {{"u", t}, {"v", t * Rational(k)}});
    for (const auto& [e, c] : univariate_coefficients(g, "t"))
      if (!primes_divide(denominator(c), Integer(k < 0 ? -k : k))) return false;
  }
  return true;
}

LaurentPoly random_kk_candidate(std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, 5), shift(-2, 2), vneg(0, 2), num(-6, 6), den(1, 4);
  LaurentPoly f;
  for (int n = 0; n < 3; ++n) {
    const unsigned i = static_cast<unsigned>(idx(rng));
    f += p_poly(i).poly() * LaurentPoly::monomial({"u", "v"}, {shift(rng), -vneg(rng)}, Rational(num(rng), den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("the polynomials p_i and p'_i", "[kk]") {
  REQUIRE(p_poly(1).poly() == P("v"));
  REQUIRE(p_poly(2).poly() == P("1/2*v^2 - 1/2*u*v"));
  REQUIRE(p_poly(3).poly() == P("1/6*v*(v-u)*(v-2*u)"));
  REQUIRE(pprime_poly(0).poly() == P("1"));
  REQUIRE(pprime_poly(1).poly() == P("1/2*v - 1/2*u"));
  for (unsigned i = 1; i <= 8; ++i) REQUIRE(p_poly(i).poly() == P("v") * pprime_poly(i - 1).poly());
}

TEST_CASE("membership examples", "[kk][member]") {
  REQUIRE(is_integral(K("1/2*v*(v-u)")));
  REQUIRE(is_integral(K("u^-1*v")));
  REQUIRE(is_integral(K("u^3 - 2*v")));
  const auto m = membership(K("1/2*v^2"));
  REQUIRE_FALSE(m.member);
  REQUIRE(m.witness->k == 3);
  REQUIRE(m.witness->degree == 2);
  REQUIRE(m.witness->coefficient == Rational(9, 2));
  REQUIRE_FALSE(is_integral(K("1/2*v")));
  REQUIRE_FALSE(is_integral(K("1/2*u^-1*v^2 + u")));
  // p'_1 = (v-u)/2 is integral, and so is its multiple by the unit v.
  REQUIRE(is_integral(pprime_poly(1)));
  REQUIRE(is_integral(KKElement(P("v") * pprime_poly(1).poly())));
  REQUIRE_THROWS_AS(KKElement(parse_expression("t", {"t"})), ValidationError);
}

TEST_CASE("membership agrees with a brute-force search over k", "[kk][member][oracle]") {
  std::mt19937 rng(41);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = random_kk_candidate(rng);
    const auto m = membership(KKElement(f));
    REQUIRE(m.member == brute_force_member(f, 40));
    if (m.member) {
      ++members;
    } else {
      ++non_members;
      // The reported witness really fails.
      const Integer k = m.witness->k;
      REQUIRE_FALSE(primes_divide(denominator(m.witness->coefficient), k));
    }
  }
  REQUIRE(members > 10);
  REQUIRE(non_members > 10);
}

TEST_CASE("decomposition examples", "[kk][decompose]") {
  REQUIRE(decomposition_text(decompose(K("v^2"))) == "(u) * p_1 + (2) * p_2");
  REQUIRE(decompose(p_poly(2)) == Decomposition{{2, P("1")}});
  REQUIRE(decompose(K("u^-1*v")) == Decomposition{{1, P("u^-1")}});
  REQUIRE(decompose(K("u^2")) == Decomposition{{0, P("u^2")}});
  REQUIRE(decompose(KKElement()).empty());
  REQUIRE_THROWS_AS(decompose(K("1/2*v^2")), NotIntegral);
  for (unsigned k = 1; k <= 10; ++k) {
    INFO("k = " << k);
    REQUIRE(decompose(i_star(BetaPoly::term(1, k, k))) == Decomposition{{k, P("1")}});
  }
}

TEST_CASE("decompositions recombine and have integral coefficients", "[kk][decompose][property]") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const auto f = random_kk_candidate(rng);
    if (!is_integral(KKElement(f))) continue;
    const auto d = decompose(KKElement(f));
    REQUIRE(recombine(d) == f);
    for (const auto& [i, c] : d) {
      REQUIRE(c.embed({"u", "v"}).max_exponent("v") <= 0);
      for (const auto& [e, x] : c.terms()) REQUIRE(is_integer(x));
    }
  }
}

TEST_CASE("localization witnesses", "[kk][localize]") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_kk_candidate(rng);
    if (!is_integral(KKElement(f))) continue;
    const auto w = localization_witness(KKElement(f));
    const auto target = f * LaurentPoly::variable("v", w.n);
    for (const auto& step : w.steps) REQUIRE(recombine(step) == target);
    for (const auto& [i, c] : w.coefficients) {
      REQUIRE(c.embed({"u", "v"}).max_exponent("v") <= 0);
      REQUIRE(c.embed({"u", "v"}).min_exponent("v") >= 0);
      for (const auto& [e, x] : c.terms()) REQUIRE(is_integer(x));
    }
  }
}

TEST_CASE("the map from K_*(CP^inf)", "[kk][istar]") {
  REQUIRE(i_star(parse_beta_poly("t^2 b2")).poly() == p_poly(2).poly());
  REQUIRE(i_star(parse_beta_poly("b1")).poly() == P("u^-1*v"));
  REQUIRE(i_star(parse_beta_poly("t^3")).poly() == P("u^3"));
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> idx(0, 4), texp(-2, 3), coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    BetaPoly a, b;
    for (int n = 0; n < 2; ++n) {
      a += BetaPoly::term(coef(rng), texp(rng), idx(rng));
      b += BetaPoly::term(coef(rng), texp(rng), idx(rng));
    }
    REQUIRE(i_star(a * b) == i_star(a) * i_star(b));
    REQUIRE(is_integral(i_star(a)));
  }
}

TEST_CASE("counit and conjugation", "[kk]") {
  REQUIRE(epsilon(p_poly(1)).str() == "t");
  for (unsigned i = 2; i <= 8; ++i) REQUIRE(epsilon(p_poly(i)).is_zero());
  REQUIRE(epsilon(K("u^-1*v + 3*u^2")).str() == "1 + 3t^2");
  REQUIRE_THROWS_AS(epsilon(K("1/2*v^2")), NotIntegral);
  REQUIRE(epsilon_rational(P("1/2*v^2")) == parse_expression("1/2*t^2", {"t"}));
  REQUIRE(conjugate(K("u")) == K("v"));
  REQUIRE(conjugate(p_poly(2)) == K("1/2*u^2 - 1/2*u*v"));
  REQUIRE(is_integral(conjugate(p_poly(5))));
}

TEST_CASE("coproduct and its counits", "[kk][coproduct]") {
  const auto c = coproduct(p_poly(2));
  REQUIRE(c.arity == 2);
  REQUIRE(c.poly == parse_expression("1/2*z2^2 - 1/2*z0*z2", {"z0", "z1", "z2"}));
  for (unsigned i = 0; i <= 6; ++i) {
    REQUIRE(counit_left(coproduct(p_poly(i))) == p_poly(i));
    REQUIRE(counit_right(coproduct(p_poly(i))) == p_poly(i));
    REQUIRE(coproduct_left(coproduct(p_poly(i))) == coproduct_right(coproduct(p_poly(i))));
  }
}

TEST_CASE("coaction on K_*(CP^inf)", "[kk][coaction]") {
  REQUIRE(eta_L_cp(1) == CoactionElement({{1, P("v")}}));
  REQUIRE(eta_L_cp(2) == CoactionElement({{2, P("v^2")}, {1, pprime_poly(1).poly() * P("v")}}));
  REQUIRE(eta_L_cp(2).str() == "(v^2) (x) b2 + (1/2*v^2 - 1/2*u*v) (x) b1");
  for (unsigned k = 1; k <= 8; ++k) {
    INFO("k = " << k);
    REQUIRE(coaction_counit(eta_L_cp(k)) == BetaPoly::term(1, k, k));
  }
  for (unsigned k = 1; k <= 10; ++k) REQUIRE(composite_hat(k) == p_poly(k));
}
