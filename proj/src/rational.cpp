#include "klasika/rational.hpp"

#include <climits>
#include <cmath>
#include <ostream>

#include "klasika/error.hpp"

namespace klasika {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long value) {
  // mpz has no long long constructor on all platforms; go through a string
  // only when the value does not fit in a long.
  if (value >= LONG_MIN && value <= LONG_MAX) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    value_ = mpq_class(mpz_class(std::to_string(value)));
  }
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Rational(num).numerator(), Rational(den).numerator()) {}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  Integer value(std::string(body), 10);
  return negative ? Integer(-value) : value;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den)) {
    throw ParseError("bad denominator in '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

double Rational::to_double() const { return value_.get_d(); }

long double Rational::to_long_double() const {
  if (value_ == 0) return 0.0L;
  // Scale into [1/4, 4] first so values outside the double range survive,
  // then a two-term split keeps the bits a single get_d() would drop.
  const long k = static_cast<long>(mpz_sizeinbase(value_.get_num_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(value_.get_den_mpz_t(), 2));
  mpq_class scaled = value_;
  if (k > 0) mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  if (k < 0) mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  const double head = scaled.get_d();
  const mpq_class tail = scaled - mpq_class(head);
  return std::ldexp(static_cast<long double>(head) + static_cast<long double>(tail.get_d()), static_cast<int>(k));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  root = Rational(Integer(sqrt(num)), Integer(sqrt(den)));
  return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace klasika
