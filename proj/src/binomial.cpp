#include "tk/binomial.hpp"

#include "tk/errors.hpp"

namespace tk {

LaurentPoly binomial_polynomial(unsigned i, const std::string& variable) {
  LaurentPoly p = LaurentPoly::constant(1);
  const LaurentPoly w = LaurentPoly::variable(variable);
  for (unsigned j = 0; j < i; ++j) p *= w - LaurentPoly::constant(Rational(j));
  return p * Rational(1, factorial(i));
}

std::vector<Rational> binomial_expand(const LaurentPoly& h) {
  const LaurentPoly g = h.compact();
  if (g.variables().size() > 1) throw Error("binomial_expand: more than one variable in " + h.str());
  if (!g.is_polynomial()) throw Error("binomial_expand: negative exponent in " + h.str());
  if (g.is_zero()) return {};
  std::int64_t degree = 0;
  for (const auto& [e, c] : g.terms())
    if (!e.empty()) degree = std::max(degree, e[0]);

  // Values h(0), ..., h(d), then repeated forward differences in place.
  std::vector<Rational> table(static_cast<std::size_t>(degree) + 1);
  for (std::int64_t x = 0; x <= degree; ++x) {
    Rational value = 0;
    for (const auto& [e, c] : g.terms()) {
      Integer xp = 1;
      for (std::int64_t k = 0; k < (e.empty() ? 0 : e[0]); ++k) xp *= x;
      value += c * xp;
    }
    table[x] = value;
  }
  for (std::size_t level = 1; level < table.size(); ++level)
    for (std::size_t x = table.size() - 1; x >= level; --x) table[x] -= table[x - 1];
  return table;
}

LaurentPoly binomial_combination(const std::vector<Rational>& coefficients, const std::string& variable) {
  LaurentPoly out;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) out += binomial_polynomial(static_cast<unsigned>(i), variable) * coefficients[i];
  return out;
}

}  // namespace tk
