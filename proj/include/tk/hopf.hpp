// Exact checks of the Hopf algebroid structure on K_*K and of the
// K_*K-coaction on K_*(CP^inf).
#pragma once

#include <string>
#include <vector>

namespace tk {

struct AxiomCheck {
  std::string name;
  bool pass = true;
  /// The first failing element and both sides, empty on success.
  std::string counterexample;
  /// Number of elements (or indices) the axiom was checked on.
  std::size_t cases = 0;
};

struct HopfReport {
  std::vector<AxiomCheck> checks;
  bool pass() const;
};

/// Runs every axiom on p_0..p_{max_degree}, on seeded random integral
/// elements, and on the coaction for 1 <= k <= max_degree.
HopfReport hopf_axiom_suite(unsigned max_degree);

}  // namespace tk
