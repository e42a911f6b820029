#ifndef VENKOV_RATIONAL_HPP
#define VENKOV_RATIONAL_HPP

#include <cctype>
#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace venkov {

// Every quantity in this library is an exact rational; there is no floating
// point and no epsilon anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Largest integer n with n <= x.
inline Integer floorRational(const Rational& x) {
  Integer num = boost::multiprecision::numerator(x);
  Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

// Nearest integer to x, ties rounding up.
inline Integer roundRational(const Rational& x) {
  return floorRational(x + Rational(1, 2));
}

// Canonical text form "p" or "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string toString(const Rational& x) { return x.str(); }

// Accepts an optionally signed integer or "p/q" with an unsigned positive
// denominator. Returns nullopt on anything else.
inline std::optional<Rational> parseRational(const std::string& token) {
  std::size_t i = 0;
  bool negative = false;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) {
    negative = token[i] == '-';
    ++i;
  }
  const std::size_t numStart = i;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
    ++i;
  }
  if (i == numStart) {
    return std::nullopt;
  }
  Integer num(token.substr(numStart, i - numStart));
  Integer den(1);
  if (i < token.size()) {
    if (token[i] != '/') {
      return std::nullopt;
    }
    ++i;
    const std::size_t denStart = i;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
      ++i;
    }
    if (i == denStart || i != token.size()) {
      return std::nullopt;
    }
    den = Integer(token.substr(denStart));
    if (den == 0) {
      return std::nullopt;
    }
  }
  Rational value = Rational(num) / Rational(den);
  return negative ? -value : value;
}

}  // namespace venkov

#endif  // VENKOV_RATIONAL_HPP
