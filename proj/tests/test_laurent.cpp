#include "tk/binomial.hpp"
#include "tk/errors.hpp"
#include "tk/expr_parser.hpp"
#include "tk/laurent.hpp"
#include "tk/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tk;

namespace {

LaurentPoly P(const std::string& s) { return parse_expression(s, {"u", "v", "t", "s", "w"}); }

LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms = 4) {
  std::uniform_int_distribution<int> exp(-3, 3), num(-9, 9), den(1, 6);
  LaurentPoly::Terms t;
  for (int k = 0; k < terms; ++k) {
    LaurentPoly::Exponents e;
    for (std::size_t i = 0; i < vars.size(); ++i) e.push_back(exp(rng));
    t[e] += Rational(num(rng), den(rng));
  }
  return LaurentPoly::from_terms(vars, t);
}

}  // namespace

TEST_CASE("ring operations on Laurent polynomials", "[laurent]") {
  REQUIRE(P("(u + v) * (u - v)") == P("u^2 - v^2"));
  REQUIRE((P("u^3*v - 2") * LaurentPoly()).is_zero());
  REQUIRE(P("(1/2*v^2 - 1/2*u*v) * 2") == P("v^2 - u*v"));
  REQUIRE(P("u - u").is_zero());
  // Mismatched contexts are reconciled by embedding.
  REQUIRE(P("u") + P("v") == P("v + u"));
  REQUIRE(P("u").embed({"u", "v"}) == P("u"));
}

TEST_CASE("canonical printing follows the expression grammar", "[laurent]") {
  REQUIRE(P("v^2 * 1/2 - 1/2*u*v").str() == "1/2*v^2 - 1/2*u*v");
  REQUIRE(P("u^-1*v").str() == "u^-1*v");
  REQUIRE(P("-3").str() == "-3");
  REQUIRE(LaurentPoly().str() == "0");
  for (const char* text : {"1/2*v^2 - 1/2*u*v", "-u^-2*v^3 + 7", "u*v*w^-4 - 5/3"})
    REQUIRE(P(P(text).str()) == P(text));
}

TEST_CASE("exponent overflow is a hard error", "[laurent]") {
  const auto big = LaurentPoly::variable("u", std::numeric_limits<std::int64_t>::max());
  REQUIRE_THROWS_AS(big * P("u"), OverflowError);
}

TEST_CASE("substitute", "[laurent]") {
  const LaurentPoly t = P("t");
  const LaurentPoly f = P("1/2*v*(v - u)");
  REQUIRE(substitute(f, {{"u", t}, {"v", P("2*t")}}) == P("t^2"));
  REQUIRE(substitute(P("u"), {{"u", P("v")}, {"v", P("u")}}) == P("v"));
  REQUIRE(substitute(P("1/2*v^2"), {{"u", t}, {"v", P("3*t")}}) == P("9/2*t^2"));
  // Negative powers need a unit image.
  REQUIRE(substitute(P("v^-1"), {{"v", P("3*t")}}) == P("1/3*t^-1"));
  REQUIRE_THROWS_AS(substitute(P("v^-1*u"), {{"v", P("t + 1")}}), NonInvertibleSubstitution);
  REQUIRE_THROWS_AS(substitute(P("v^-2"), {{"v", LaurentPoly()}}), NonInvertibleSubstitution);
  // Positive powers of non-units are fine.
  REQUIRE(substitute(P("v^2"), {{"v", P("t + 1")}}) == P("t^2 + 2*t + 1"));
}

TEST_CASE("homogeneous components", "[laurent]") {
  auto c = homogeneous_components(P("u + v^2"));
  REQUIRE(c.size() == 2);
  REQUIRE(c.at(1) == P("u"));
  REQUIRE(c.at(2) == P("v^2"));
  auto d = homogeneous_components(P("1/2*v*(v - u)"));
  REQUIRE(d.size() == 1);
  REQUIRE(d.at(2) == P("1/2*v*(v-u)"));
  auto e = homogeneous_components(P("u^-1*v"));
  REQUIRE(e.size() == 1);
  REQUIRE(e.at(0) == P("u^-1*v"));
}

TEST_CASE("binomial polynomials", "[laurent][binomial]") {
  REQUIRE(binomial_polynomial(0) == P("1"));
  REQUIRE(binomial_polynomial(2) == P("1/2*w^2 - 1/2*w"));
  REQUIRE(binomial_polynomial(3) == P("1/6*w^3 - 1/2*w^2 + 1/3*w"));
}

TEST_CASE("binomial expansion by finite differences", "[laurent][binomial]") {
  REQUIRE(binomial_expand(P("w^2")) == std::vector<Rational>{0, 1, 2});
  REQUIRE(binomial_expand(binomial_polynomial(3)) == std::vector<Rational>{0, 0, 0, 1});
  REQUIRE(binomial_expand(P("1")) == std::vector<Rational>{1});
  REQUIRE(binomial_expand(LaurentPoly()).empty());
  REQUIRE_THROWS(binomial_expand(P("w^-1")));
  REQUIRE_THROWS(binomial_expand(P("u*w")));
}

TEST_CASE("binomial expansion round trip on random polynomials", "[laurent][binomial][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(0, 12), coef(-20, 20);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly h;
    const int d = deg(rng);
    for (int e = 0; e <= d; ++e) h += LaurentPoly::variable("w", e) * Rational(coef(rng));
    REQUIRE(binomial_combination(binomial_expand(h)) == h);
  }
}

TEST_CASE("integer-valued polynomials have integral binomial coefficients", "[laurent][binomial][property]") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(1, 10), coef(-15, 15);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = deg(rng);
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = coef(rng);
    const LaurentPoly h = binomial_combination(c);
    for (const auto& x : binomial_expand(h)) REQUIRE(is_integer(x));
    // Shifting one binomial coordinate by 1/2 leaves the integer-valued set.
    std::uniform_int_distribution<int> pick(0, d);
    auto perturbed = c;
    perturbed[pick(rng)] += Rational(1, 2);
    const auto back = binomial_expand(binomial_combination(perturbed));
    REQUIRE(std::any_of(back.begin(), back.end(), [](const Rational& x) { return !is_integer(x); }));
  }
}

TEST_CASE("ring axioms on random Laurent polynomials", "[laurent][property]") {
  std::mt19937 rng(3);
  const std::vector<std::string> vars = {"u", "v"};
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(rng, vars), b = random_poly(rng, vars), c = random_poly(rng, {"u", "w"});
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("substitute is a ring homomorphism", "[laurent][property]") {
  std::mt19937 rng(5);
  const std::map<std::string, LaurentPoly> phi = {{"u", P("3*t")}, {"v", P("-1/2*t^2*s")}};
  const std::map<std::string, LaurentPoly> swap = {{"u", P("v")}, {"v", P("u")}};
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_poly(rng, {"u", "v"}), g = random_poly(rng, {"u", "v"});
    REQUIRE(substitute(f * g, phi) == substitute(f, phi) * substitute(g, phi));
    REQUIRE(substitute(f + g, phi) == substitute(f, phi) + substitute(g, phi));
    REQUIRE(substitute(substitute(f, swap), swap) == f);
  }
}

TEST_CASE("truncated series operations", "[laurent][series]") {
  using S = TruncSeries<Rational>;
  const auto s = S::variable("s", 3);
  const auto t = S::variable("t", 3);
  REQUIRE(compose(s, t + t * t) == t + t * t);

  const auto s2 = S::variable("s", 2), t2 = S::variable("t", 2);
  const auto f = s2 + t2 + s2 * t2;
  REQUIRE(f * f == s2 * s2 + S::constant({"s", "t"}, 2, 2) * s2 * t2 + t2 * t2);

  const auto x = S::variable("s", 5);
  const auto one = S::constant({"s"}, 5, 1);
  REQUIRE((one + x) * (one - x) == one - x * x);
  REQUIRE_THROWS_AS(compose(s, one + t), CompositionWithUnit);
  REQUIRE((x * x * x).with_order(2).is_zero());
}

TEST_CASE("series printing", "[laurent][series]") {
  using S = TruncSeries<Integer>;
  const auto s = S::variable("s", 4);
  const auto c = [](int k) { return S::constant({"s"}, 4, k); };
  REQUIRE((c(3) * s + c(3) * s * s + s * s * s).str() == "3s + 3s^2 + s^3");
  REQUIRE((c(-1) + s * s).str() == "-1 + s^2");
  REQUIRE(s.str() == "s");
}

TEST_CASE("expression grammar", "[parser]") {
  REQUIRE(P(" 2 * u ^ 3 ") == LaurentPoly::variable("u", 3) * Rational(2));
  REQUIRE(P("-u + v") == P("v - u"));
  REQUIRE(P("u - -v") == P("u + v"));
  REQUIRE(P("u*v^-2") == LaurentPoly::monomial({"u", "v"}, {1, -2}, 1));
  REQUIRE(P("(u + v)^2") == P("u^2 + 2*u*v + v^2"));
  REQUIRE(P("3/6") == LaurentPoly::constant(Rational(1, 2)));
}

TEST_CASE("expression parse errors carry 1-based byte offsets", "[parser]") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_expression(text, {"u", "v"});
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  REQUIRE(offset_of("u + x") == 5);
  REQUIRE(offset_of("u +") == 4);
  REQUIRE(offset_of("1/0") == 3);
  REQUIRE(offset_of("(u") == 3);
  REQUIRE(offset_of("u v") == 3);
  REQUIRE(offset_of("") == 1);
  REQUIRE(offset_of("u^") == 3);
  REQUIRE(offset_of("(u+v)^-1") == 7);
}
