#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "sympbf/errors.hpp"

namespace sympbf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "-p", or "p/q" with optional sign on the numerator.
/// Rejects anything else (floats, spaces, empty denominators).
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw SpecParseError("invalid rational literal: \"" + std::string(text) + "\"");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) fail();
  Integer num(std::string(text.substr(digits_begin, pos - digits_begin)));
  if (negative) num = -num;
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') fail();
  ++pos;
  std::size_t den_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_begin || pos != text.size()) fail();
  Integer den(std::string(text.substr(den_begin)));
  if (den == 0) throw SpecParseError("zero denominator in rational literal");
  return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact lift of a finite double; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw SpecParseError("non-finite value cannot be lifted to a rational");
  return Rational(x);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);  // exact: product of i+1 consecutive integers divides
  }
  return b;
}

inline Integer pow_integer(const Integer& base, unsigned e) {
  Integer r = 1, b = base;
  for (; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned e) {
  return Rational(pow_integer(numerator(base), e), pow_integer(denominator(base), e));
}

}  // namespace sympbf
