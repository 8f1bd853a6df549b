// Integer-valued polynomials in the binomial basis P_i(w) = w(w-1)...(w-i+1)/i!.
#pragma once

#include "tk/laurent.hpp"

#include <string>
#include <vector>

namespace tk {

/// P_i in `variable`; P_0 = 1.
LaurentPoly binomial_polynomial(unsigned i, const std::string& variable = "w");

/// Coefficients (c_0..c_d) with h = sum c_i P_i, from the forward-difference
/// table of h at 0..d. `h` must be a polynomial in at most one variable.
std::vector<Rational> binomial_expand(const LaurentPoly& h);

/// sum c_i P_i, the inverse of binomial_expand.
LaurentPoly binomial_combination(const std::vector<Rational>& coefficients,
                                 const std::string& variable = "w");

}  // namespace tk
