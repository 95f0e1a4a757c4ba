#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace u2quot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt& v);

bool is_integer(const Rational& r);
BigInt floor_of(const Rational& r);

// "num/den", or "num" when den == 1.
std::string to_string(const Rational& r);

// Accepts "a", "-a/b" and finite decimals like "0.125". Throws
// std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

bool is_perfect_square(const BigInt& v);

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
// Inverse of a modulo m (m >= 1); returns 0 for m == 1. Throws
// std::domain_error when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace u2quot
