// Twisted K-homology as the base change of a presented module along the
// augmentation b_0, b_1 -> 1, b_{>=2} -> 0, t -> 1.
#pragma once

#include "tk/graded_group.hpp"
#include "tk/presentation.hpp"

#include <array>

namespace tk {

/// One integer matrix per parity: rows are that parity's generators in
/// order, columns its relations in order, entries augment_hat(coeff) at
/// t = 1. The cokernels are the two graded pieces.
std::array<IntMatrix, 2> base_change(const Presentation& p);

GradedGroup twisted_k(const Presentation& p);

}  // namespace tk
