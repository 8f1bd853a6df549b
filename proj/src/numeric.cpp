#include "tk/numeric.hpp"

#include "tk/errors.hpp"

#include <algorithm>

namespace tk {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in multiplication");
  return r;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

unsigned max_prime_exponent(Integer n) {
  if (n < 0) n = -n;
  unsigned best = 0;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    best = std::max(best, e);
  }
  if (n > 1) best = std::max(best, 1u);
  return best;
}

bool primes_divide(const Integer& d, const Integer& k) {
  // Strip from d every prime it shares with k; what remains must be a unit.
  Integer rest = abs(d);
  Integer g = gcd(rest, k);
  while (g > 1) {
    while (rest % g == 0) rest /= g;
    g = gcd(rest, k);
  }
  return rest == 1;
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace tk
