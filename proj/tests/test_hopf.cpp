#include "tk/hopf.hpp"
#include "tk/kk.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tk;

TEST_CASE("every Hopf algebroid axiom holds through degree 8", "[hopf]") {
  const auto report = hopf_axiom_suite(8);
  for (const auto& c : report.checks) {
    INFO(c.name << ": " << c.counterexample);
    CHECK(c.pass);
    CHECK(c.cases > 0);
  }
  REQUIRE(report.pass());
  REQUIRE(report.checks.size() == 9);
}

TEST_CASE("axiom examples", "[hopf]") {
  REQUIRE(counit_left(coproduct(p_poly(2))) == p_poly(2));
  REQUIRE(coaction_counit(eta_L_cp(3)) == BetaPoly::term(1, 3, 3));
  REQUIRE(conjugate(conjugate(p_poly(5))) == p_poly(5));
}

TEST_CASE("a wrong coaction coefficient breaks counitarity", "[hopf]") {
  auto terms = eta_L_cp(3).terms();
  terms[3] += LaurentPoly::variable("u") * LaurentPoly::variable("v", 2);
  REQUIRE_FALSE(coaction_counit(CoactionElement(terms)) == BetaPoly::term(1, 3, 3));
}
