// Seeded random inputs for the self-test, the acceptance run and the
// property tests. Reproducible for a fixed seed and standard library.
#pragma once

#include "tk/beta_poly.hpp"
#include "tk/kk.hpp"
#include "tk/tor.hpp"

#include <random>

namespace tk {

IntMatrix random_matrix(std::mt19937& rng, Index rows, Index cols, int bound);

/// Product of elementary row operations with small multipliers.
IntMatrix random_unimodular(std::mt19937& rng, Index n);

/// U (x) Lambda_D with U = Z^rank, written in a scrambled Z-basis so that
/// nothing downstream can lean on the tensor structure.
TruncModule scrambled_extended(std::mt19937& rng, std::shared_ptr<const TruncRing> ring, Index rank);

/// A homogeneous element of degree |r| <= max_degree whose denominators
/// divide 24. Roughly half are built from the p_i (hence members); the rest
/// are perturbed or free-form and usually are not.
KKElement random_kk_candidate(std::mt19937& rng, int max_degree = 6);

/// Nonzero, up to `terms` terms with beta index <= max_index.
BetaPoly random_beta_poly(std::mt19937& rng, unsigned max_index, int terms = 3);

}  // namespace tk
