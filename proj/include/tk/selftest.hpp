// The invariant suites behind `tk selftest`, also used by the acceptance run.
#pragma once

#include "tk/beta_poly.hpp"
#include "tk/hopf.hpp"
#include "tk/linalg.hpp"
#include "tk/presentation.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tk {

struct SelftestOptions {
  /// Degree for the Hopf axioms, composite_hat and i_star round trips.
  unsigned degree = 8;
  unsigned fgl_order = 10;
  std::size_t samples = 200;
  std::uint32_t seed = 2718;
  /// Product table used by the formal group law and truncation checks.
  StructureConstants constants = structure_constant;
};

SelftestOptions normal_depth();
SelftestOptions deep_depth();

/// Every suite, in a fixed order; each stops at its first counterexample.
std::vector<AxiomCheck> run_selftest(const SelftestOptions& options);

/// Named presentations with a known twisted K-group.
std::vector<std::pair<std::string, Presentation>> presentation_catalog();

// Individual suites.
AxiomCheck fgl_suite(unsigned order, const StructureConstants& constants);
AxiomCheck truncation_suite(unsigned max_truncation, const StructureConstants& constants);
AxiomCheck composite_hat_suite(unsigned max_k);
AxiomCheck i_star_suite(unsigned max_k);
/// Decision procedure against sampled_failure over k in +-1..+-range, with
/// decompose round trips for members and witness checks for the rest.
AxiomCheck membership_suite(std::mt19937& rng, std::size_t samples, unsigned range);
AxiomCheck snf_suite(std::mt19937& rng, std::size_t trials, Index max_dim, int bound);
AxiomCheck injectivity_suite(std::mt19937& rng, std::size_t samples, unsigned max_i);
/// twisted_k against Tor_0 in both resolution modes.
AxiomCheck tor0_suite();

}  // namespace tk
