#pragma once

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klasika/rational.hpp"

namespace klasika {

/// Numeric root container. Components are always finite.
using Complex = std::complex<double>;

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending order, index i holding the
/// coefficient of x^i. Trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient list and degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  /// c
  static Polynomial constant(const Rational& c);
  /// c * x^k
  static Polynomial monomial(const Rational& c, int k);
  /// x - r
  static Polynomial linear_root(const Rational& r);
  /// prod (x - r_i)
  static Polynomial from_roots(std::span<const Rational> roots);

  /// Comma-separated ascending coefficients, each an integer or `p/q`;
  /// "-1,-6,0,8" is 8x^3 - 6x - 1. Throws ParseError.
  static Polynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;
  long double evaluate(long double x) const;
  Complex evaluate(Complex z) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable, descending powers: "8x^3 - 6x - 1".
  std::string to_string(char var = 'x') const;
  /// Compact form without spaces and with explicit '*': "x^2+2*x+5".
  std::string to_compact_string(char var = 'x') const;
  /// Ascending comma-separated coefficients (the parse format).
  std::string to_coeff_list() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, const Rational& c);
Polynomial poly_pow(const Polynomial& f, int k);

/// Formal derivative.
Polynomial poly_derivative(const Polynomial& f);
/// Antiderivative with zero constant term.
Polynomial poly_integral(const Polynomial& f);

/// Euclidean division f = q*g + r with deg r < deg g. DomainError if g = 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);

/// f scaled to leading coefficient 1 (zero stays zero).
Polynomial monic(const Polynomial& f);

/// Monic gcd over Q. DomainError when both inputs are zero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// f(x + c)
Polynomial poly_shift(const Polynomial& f, const Rational& c);
/// f(-x)
Polynomial poly_reflect(const Polynomial& f);

/// Integer polynomial proportional to f with coprime coefficients and a
/// positive leading coefficient.
Polynomial primitive_part(const Polynomial& f);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, ascending by value. Candidates
/// p/q come from divisors of the trailing and leading coefficients of the
/// primitive integer form of f. DomainError on the zero polynomial;
/// UnsupportedError when the end coefficients resist factoring or yield more
/// than 4e6 candidate pairs.
std::vector<RationalRoot> rational_roots(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace klasika
