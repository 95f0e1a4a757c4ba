#include "u2quot/rational.hpp"

#include <limits>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace u2quot {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

BigInt floor_of(const Rational& r) {
  BigInt n = numerator_of(r), d = denominator_of(r);
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex frac(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  static const std::regex dec(R"(\s*([+-]?)(\d*)\.(\d+)\s*)");
  std::smatch mt;
  if (std::regex_match(text, mt, frac)) {
    BigInt num(mt[1].str());
    BigInt den = mt[2].matched ? BigInt(mt[2].str()) : BigInt(1);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (std::regex_match(text, mt, dec)) {
    std::string whole = mt[2].str().empty() ? "0" : mt[2].str();
    std::string frac_digits = mt[3].str();
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_digits.size(); ++i) den *= 10;
    Rational r(BigInt(whole) * den + BigInt(frac_digits), den);
    return mt[1].str() == "-" ? Rational(-r) : r;
  }
  throw std::invalid_argument("not a rational number: '" + text + "'");
}

bool is_perfect_square(const BigInt& v) {
  if (v < 0) return false;
  BigInt s = boost::multiprecision::sqrt(v);
  return s * s == v;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return mod_floor(old_s, m);
}

}  // namespace u2quot
