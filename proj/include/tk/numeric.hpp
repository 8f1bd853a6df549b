// Exact scalar types shared by every module.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace tk {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exponent arithmetic is checked; wraparound is a hard error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

Integer factorial(unsigned n);
Integer binomial(std::int64_t n, std::int64_t k);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest exponent to which any prime divides `n` (0 for |n| <= 1).
unsigned max_prime_exponent(Integer n);

/// True when every prime factor of `d` divides `k`.
bool primes_divide(const Integer& d, const Integer& k);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace tk
