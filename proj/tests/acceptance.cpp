// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "tk/cp_ring.hpp"
#include "tk/kk.hpp"
#include "tk/samples.hpp"
#include "tk/selftest.hpp"
#include "tk/tor.hpp"
#include "tk/twist.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace tk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome from(const AxiomCheck& c) { return {c.pass, c.pass ? std::to_string(c.cases) + " cases" : c.name + ": " + c.counterexample}; }

Presentation one_generator(const std::vector<BetaPoly>& relations) {
  Presentation p;
  p.generators = {{"x", 0}};
  for (const auto& r : relations) p.relations.push_back({{0, r}});
  return p;
}

Outcome cyclic_twists() {
  for (int n = 1; n <= 12; ++n) {
    const GradedGroup g = twisted_k(one_generator({BetaPoly::term(n, 0, 1)}));
    const AbelianGroup want = n == 1 ? AbelianGroup{} : AbelianGroup{0, {Integer(n)}};
    if (!(g.parity0 == want) || !g.parity1.is_zero()) return {false, "n=" + std::to_string(n) + ": " + g.str()};
  }
  return {true, "n = 1..12"};
}

Outcome all_beta_twist() {
  std::vector<BetaPoly> rels;
  for (unsigned i = 1; i <= 8; ++i) rels.push_back(BetaPoly::beta(i));
  const GradedGroup g = twisted_k(one_generator(rels));
  if (!g.parity0.is_zero() || !g.parity1.is_zero()) return {false, g.str()};
  return {true, g.str()};
}

Outcome free_presentations() {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Presentation p;
    std::size_t counts[2] = {0, 0};
    const int r = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < r; ++i) {
      const int parity = std::uniform_int_distribution<int>(0, 1)(rng);
      p.generators.push_back({"g" + std::to_string(i), parity});
      ++counts[parity];
    }
    const GradedGroup g = twisted_k(p);
    if (!(g.parity0 == AbelianGroup{counts[0], {}}) || !(g.parity1 == AbelianGroup{counts[1], {}}))
      return {false, "rank " + std::to_string(r) + ": " + g.str()};
  }
  return {true, "50 presentations, rank <= 8"};
}

Outcome fgl_identities() {
  const auto product = fgl_product_identity_check(10);
  if (!product.pass) return {false, product.identity + ": " + product.counterexample};
  for (unsigned m = 1; m <= 6; ++m) {
    const auto r = fgl_identity_check(m, 8);
    if (!r.pass) return {false, r.identity + ": " + r.counterexample};
  }
  return {true, "product through order 10, m = 1..6 through order 8"};
}

Outcome composite_and_decompose() {
  const AxiomCheck a = composite_hat_suite(10);
  if (!a.pass) return from(a);
  const AxiomCheck b = i_star_suite(10);
  if (!b.pass) return from(b);
  return {true, "k = 1..10"};
}

Outcome membership_soundness() {
  std::mt19937 rng(6);
  const AxiomCheck c = membership_suite(rng, 200, 25);
  return {c.pass, c.pass ? c.name : c.counterexample};
}

Outcome hopf_axioms() {
  const HopfReport r = hopf_axiom_suite(8);
  for (const auto& c : r.checks)
    if (!c.pass) return from(c);
  return {true, std::to_string(r.checks.size()) + " axioms through degree 8"};
}

Outcome tor0_matches_twist() { return from(tor0_suite()); }

Outcome extended_vanishing() {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> rank(1, 3), trunc(1, 6);
  int relative_runs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto ring = std::make_shared<const TruncRing>(trunc(rng));
    const Index u = rank(rng);
    const TruncModule m = scrambled_extended(rng, ring, u);
    std::vector<ResolutionMode> modes = {ResolutionMode::free};
    // For U free the relative resolution's stage-3 term has Z-rank
    // u (D+1)^2 D^3; run it where that stays within the engine's limit.
    const Index d = ring->truncation(), r = ring->rank();
    if (u * r * r * d * d * d <= 4000) modes.push_back(ResolutionMode::relative);
    for (auto mode : modes) {
      const auto t = tor(m, 3, mode);
      const std::string where = "D=" + std::to_string(ring->truncation()) + ", rank " + std::to_string(u) +
                                (mode == ResolutionMode::free ? ", free" : ", relative");
      if (!(t[0] == AbelianGroup{static_cast<std::size_t>(u), {}})) return {false, where + ": Tor_0 = " + t[0].str()};
      for (unsigned s = 1; s <= 3; ++s)
        if (!t[s].is_zero()) return {false, where + ": Tor_" + std::to_string(s) + " = " + t[s].str()};
      if (mode == ResolutionMode::relative) ++relative_runs;
    }
  }
  return {true, "20 modules, s = 1..3 (" + std::to_string(relative_runs) + " also in relative mode)"};
}

Outcome snf_contract() {
  std::mt19937 rng(10);
  return from(snf_suite(rng, 100, 12, 100));
}

Outcome injectivity() {
  std::mt19937 rng(11);
  return from(injectivity_suite(rng, 100, 6));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "cyclic twists of the 3-sphere give Z/n", 1, cyclic_twists},
      {2, "killing every b_i gives 0", 1, all_beta_twist},
      {3, "relation-free presentations are free", 0, free_presentations},
      {4, "formal group law identities", 10, fgl_identities},
      {5, "composite_hat(k) = p_k and decompose(i_star(t^k b_k)) = {k: 1}", 0, composite_and_decompose},
      {6, "membership agrees with sampling", 30, membership_soundness},
      {7, "Hopf algebroid axioms", 10, hopf_axioms},
      {8, "Tor_0 equals twisted K in both modes", 0, tor0_matches_twist},
      {9, "extended modules have no higher Tor", 0, extended_vanishing},
      {10, "Smith normal form contract", 0, snf_contract},
      {11, "multiplication by b_i is injective", 0, injectivity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && seconds >= c.budget) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s (%s) [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
  }
  return failed == 0 ? 0 : 1;
}
