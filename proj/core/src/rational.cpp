#include "g1k/rational.hpp"

#include <cctype>
#include <numeric>

namespace g1k {

std::string to_string(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) {
    s += "/";
    s += den(r).str();
  }
  return s;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw error("invalid rational: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num_part = text.substr(0, slash);
  const std::string den_part = text.substr(slash + 1);
  if (!is_integer_token(num_part) || !is_integer_token(den_part)) {
    throw error("invalid rational: '" + text + "'");
  }
  Integer d(den_part);
  if (d == 0) throw error("zero denominator in rational: '" + text + "'");
  return Rational(Integer(num_part), d);
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) throw error("rational_pow: zero base with negative exponent");
    return Rational(1) / rational_pow(base, -exponent);
  }
  Rational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace g1k
