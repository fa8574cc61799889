#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace skewbi {

// Exact rational scalar. Always kept in lowest terms with positive
// denominator by the GMP backend; equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Text form "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer result = 1;
  for (long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

inline Integer factorial(long n) {
  Integer result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace skewbi
