#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "errors.hpp"

namespace flexmeadow {

/// Arbitrary-precision rational. All arithmetic in the library is exact;
/// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const Rational& r) { return r.sign(); }

/// "p" when the denominator is 1, "p/q" otherwise (canonical reduced form).
inline std::string rat_str(const Rational& r) { return r.str(); }

/// Parse "p" or "p/q" with an optional leading sign. Throws SyntaxError.
inline Rational rat_parse(const std::string& s) {
  std::size_t i = 0;
  auto fail = [&](const char* msg, std::size_t at) -> Rational {
    throw SyntaxError(msg, at);
  };
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) return fail("expected digits", i);
  BigInt num(s.substr(num_start, i - num_start));
  BigInt den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start) return fail("expected digits after '/'", i);
    den = BigInt(s.substr(den_start, i - den_start));
    if (den == 0) return fail("zero denominator", den_start);
  }
  if (i != s.size()) return fail("trailing characters in rational", i);
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace flexmeadow
