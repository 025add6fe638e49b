// Exact integer and rational arithmetic used by every other header.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Integer out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Generalized binomial coefficient.
///
/// For any integer `top` and `k >= 0` this is the falling factorial
/// top (top-1) ... (top-k+1) / k!, so negative upper arguments are allowed:
/// binomial(-2, k) == (-1)^k (k+1). It vanishes for k < 0, and for
/// 0 <= top < k.
inline Integer binomial(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  if (top >= 0 && k > top) return 0;
  if (top >= 0 && k > top - k) k = top - k;
  Integer num = 1;
  for (std::int64_t i = 0; i < k; ++i) num *= Integer(top - i);
  return num / factorial(k);
}

/// "p/q" for non-integers, "p" otherwise.
inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
inline Rational parse_rational(const std::string& text) {
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!digits_ok(num, true)) throw std::invalid_argument("malformed rational '" + text + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string::npos) return Rational(p);
  const std::string den = text.substr(slash + 1);
  if (!digits_ok(den, false)) throw std::invalid_argument("malformed rational '" + text + "'");
  Integer q(den);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(p, q);
}

}  // namespace symcd
