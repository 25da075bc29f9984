#ifndef G1K_RATIONAL_HPP
#define G1K_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "g1k/errors.hpp"

namespace g1k {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar, always stored in lowest terms with a positive
/// denominator; the only scalar type of the library.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline bool is_odd_integer(const Rational& r) {
  return is_integer(r) && num(r) % 2 != 0;
}

/// Renders as "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

/// Parses "num", "num/den", or "-num/den"; throws g1k::error on anything else.
Rational parse_rational(const std::string& text);

Rational rational_pow(const Rational& base, int exponent);

Integer factorial(int n);
Integer binomial(int n, int k);

long long lcm_ll(long long a, long long b);

}  // namespace g1k

#endif  // G1K_RATIONAL_HPP
