#include "tk/cli.hpp"
#include "tk/presentation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tk;

namespace {

const char* kCyclic5 = R"({
  "truncation": 8,
  "generators": [ { "name": "x", "parity": 0 } ],
  "relations": [ [ { "gen": "x", "coeff": "5 b1" } ] ]
})";

}  // namespace

TEST_CASE("twist command", "[cli]") {
  const auto r = guarded([] { return cmd_twist(kCyclic5); });
  REQUIRE(r.code == kOk);
  REQUIRE(r.text == "parity 0: Z/5, parity 1: 0");
  REQUIRE(r.render(true) ==
          "{\n  \"parity0\": {\n    \"free_rank\": 0,\n    \"torsion\": [\n      5\n    ]\n  },\n"
          "  \"parity1\": {\n    \"free_rank\": 0,\n    \"torsion\": []\n  }\n}\n");
  REQUIRE(guarded([] { return cmd_twist("{\"truncation\": 8,"); }).code == kInputError);
  REQUIRE(guarded([] { return cmd_twist(R"({"generators": [{"name": "x", "parity": 2}]})"); }).code == kInputError);
}

TEST_CASE("kk commands", "[cli]") {
  auto kk = [](const char* op, const char* e) { return guarded([=] { return cmd_kk(op, e); }); };
  REQUIRE(kk("member", "1/2*v^2 - 1/2*u*v").text == "yes");
  const auto no = kk("member", "1/2*v^2");
  REQUIRE(no.code == kNegative);
  REQUIRE(no.json["witness"]["k"] == "3");
  REQUIRE(kk("eps", "v").text == "t");
  REQUIRE(kk("conj", "u^2*v^-1").text == "u^-1*v^2");
  REQUIRE(kk("decompose", "v^2").text == "(u) * p_1 + (2) * p_2");
  REQUIRE(kk("decompose", "1/2*v^2").code == kNegative);
  REQUIRE(kk("eps", "1/2*v").code == kNegative);
  const auto bad = kk("member", "u + x");
  REQUIRE(bad.code == kInputError);
  REQUIRE(bad.json["error"]["offset"] == 5);
}

TEST_CASE("fgl and cp commands", "[cli]") {
  REQUIRE(guarded([] { return cmd_fgl_nseries(3, 4); }).text == "3s + 3s^2 + s^3");
  REQUIRE(guarded([] { return cmd_fgl_nseries(1, 4); }).text == "s");
  REQUIRE(guarded([] { return cmd_fgl_nseries(3, -1); }).code == kInputError);
  const auto id = guarded([] { return cmd_fgl_identity(2, 6); });
  REQUIRE(id.code == kOk);
  REQUIRE(id.json["pass"] == true);
  REQUIRE(guarded([] { return cmd_cp_mult(1, 1, -1); }).text == "b1 + 2 b2");
  REQUIRE(guarded([] { return cmd_cp_mult(2, 3, 4); }).text == "3 b3 + 12 b4");
  REQUIRE(guarded([] { return cmd_cp_mult(5, 1, 4); }).code == kInputError);
}

TEST_CASE("tor command", "[cli]") {
  const auto r = guarded([] { return cmd_tor(kCyclic5, 2, "relative", 3); });
  REQUIRE(r.code == kOk);
  REQUIRE(r.json["truncation"] == 3);
  REQUIRE(r.json["caveat"] == "higher Tor computed over truncated ring");
  REQUIRE(r.json["tor"].size() == 3);
  REQUIRE(r.json["tor"][0]["parity0"]["torsion"][0] == 5);
  REQUIRE(r.json["tor"][1]["parity0"]["free_rank"] == 0);
  REQUIRE(guarded([] { return cmd_tor(kCyclic5, 1, "sideways", 0); }).code == kInputError);
  // --trunc 0 falls back to the document's truncation.
  REQUIRE(guarded([] { return cmd_tor(kCyclic5, 0, "free", 0); }).json["truncation"] == 8);
}

TEST_CASE("json output is deterministic", "[cli]") {
  auto tor = [] { return guarded([] { return cmd_tor(kCyclic5, 1, "free", 4); }).render(true); };
  auto self = [] { return guarded([] { return cmd_selftest("normal", false); }).render(true); };
  REQUIRE(tor() == tor());
  REQUIRE(self() == self());
}

TEST_CASE("selftest passes and detects an injected fault", "[cli][selftest]") {
  const auto ok = guarded([] { return cmd_selftest("normal", false); });
  REQUIRE(ok.code == kOk);
  const auto broken = guarded([] { return cmd_selftest("normal", true); });
  REQUIRE(broken.code == kNegative);
  REQUIRE(broken.json["pass"] == false);
  bool counterexample = false;
  for (const auto& s : broken.json["suites"])
    if (s["pass"] == false && !s["counterexample"].get<std::string>().empty()) counterexample = true;
  REQUIRE(counterexample);
  REQUIRE(guarded([] { return cmd_selftest("shallow", false); }).code == kInputError);
}
