#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "quadwalk/errors.hpp"

namespace quadwalk {

// Exact rational on int64, sufficient for step probabilities and their
// moment sums. Intermediate products run over 128 bits and reduce before the
// range check, so realistic inputs (decimal literals share power-of-ten
// denominators) never overflow; genuinely out-of-range values throw.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  void normalize() {
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }

  using Wide = __int128;

  static Rational from_wide(Wide n, Wide d) {
    if (d == 0) fail(ErrorCode::ParseError, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const Wide g = wide_gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr Wide kMax = 0x7fffffffffffffffLL;
    if (n > kMax || n < -kMax || d > kMax)
      fail(ErrorCode::ParseError, "rational out of the 64-bit range");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num) * b.den + Wide(b.num) * a.den, Wide(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num) * b.den - Wide(b.num) * a.den, Wide(a.den) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(Wide(a.num) * b.num, Wide(a.den) * b.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

private:
  static Wide wide_gcd(Wide a, Wide b) {
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

// Parses "3/4", "1", "0.25", "-0.125". Decimal literals become exact decimal
// fractions. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace quadwalk
