#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace klasika {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact fraction with an arbitrary-precision numerator and a positive
/// denominator. Always stored in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value);
  /// Throws DomainError when `den` is zero.
  Rational(const Integer& num, const Integer& den);
  Rational(long long num, long long den);

  /// Parses `[+-]digits` or `[+-]digits/digits`. Throws ParseError.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const;
  long double to_long_double() const;

  /// `p` or `p/q`.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational abs(const Rational& r);
/// Integer power; negative exponents invert (DomainError for 0^-k).
Rational pow(const Rational& base, int exponent);
/// Exact square root if `r` is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a decimal integer literal `[+-]digits`. Throws ParseError.
Integer parse_integer(std::string_view text);

}  // namespace klasika
