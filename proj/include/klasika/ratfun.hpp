#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "klasika/polynomial.hpp"

namespace klasika {

struct LinearFactor {
  Rational root;
  int multiplicity = 1;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// x^2 + p x + q with p^2 - 4q < 0.
struct QuadraticFactor {
  Rational p;
  Rational q;
  int multiplicity = 1;
  Polynomial polynomial() const { return Polynomial{q, p, Rational(1)}; }
  friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

struct RealFactorization {
  Rational constant;
  std::vector<LinearFactor> linear_factors;
  std::vector<QuadraticFactor> quadratic_factors;

  /// constant * prod (x - r)^m * prod (x^2 + p x + q)^m
  Polynomial expand() const;
};

/// Factors q over R using only rational data: rational roots are peeled off
/// and the square-free parts of the rest must split over Q into quadratics
/// with negative discriminant (found from conjugate root pairs, confirmed by
/// exact division). Throws UnsupportedFactorization naming the residual
/// otherwise (x^2 - 2, x^4 + 1, ...), DomainError if q = 0.
RealFactorization factor_real(const Polynomial& q);

/// A / (x - root)^power
struct LinearTerm {
  Rational coefficient;
  Rational root;
  int power = 1;
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// (B x + C) / (x^2 + p x + q)
struct QuadraticTerm {
  Rational b;
  Rational c;
  Rational p;
  Rational q;
  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

struct PartialFractions {
  Polynomial polynomial_part;
  std::vector<LinearTerm> linear_terms;  ///< by root, then power
  std::vector<QuadraticTerm> quadratic_terms;

  /// The sum over a common monic denominator: {numerator, denominator}.
  std::pair<Polynomial, Polynomial> recombine() const;
  long double evaluate(long double x) const;
  std::string to_string() const;
};

/// p/q as a polynomial plus proper fractions over the real factors of q,
/// coefficients from an exact linear system. Zero terms are dropped.
/// UnsupportedError for a quadratic factor of multiplicity >= 2; errors of
/// factor_real propagate; DomainError if q = 0.
PartialFractions partial_fractions(const Polynomial& p, const Polynomial& q);

namespace term {

struct PolyTerm {
  Polynomial poly;
};
/// coefficient * ln|x - root|
struct LogAbs {
  Rational coefficient;
  Rational root;
};
/// coefficient / (x - root)^exponent, exponent >= 1
struct PowerTerm {
  Rational coefficient;
  Rational root;
  int exponent = 1;
};
/// coefficient * ln(x^2 + p x + q)
struct LogQuadratic {
  Rational coefficient;
  Rational p;
  Rational q;
};
/// (coefficient / s) * arctan((x + shift) / s) with s = sqrt(scale_squared)
struct Arctan {
  Rational coefficient;
  Rational scale_squared;
  Rational shift;
};

}  // namespace term

using AntiderivativeTerm =
    std::variant<term::PolyTerm, term::LogAbs, term::PowerTerm, term::LogQuadratic, term::Arctan>;

struct SymbolicAntiderivative {
  std::vector<AntiderivativeTerm> terms;

  /// Canonical text: polynomial part, logs of linear factors by root, power
  /// terms, logs of quadratics, arctangents, then " + K".
  std::string to_string() const;
  long double evaluate(long double x) const;
};

/// Term-by-term antiderivative of the partial fractions of p/q.
SymbolicAntiderivative integrate_rational(const Polynomial& p, const Polynomial& q);

enum class ConicShape { Circle, Ellipse, Hyperbola, Parabola };

std::string_view to_string(ConicShape shape);
/// Case-insensitive; ParseError on anything else.
ConicShape parse_conic_shape(std::string_view name);

/// Rational parametrization of a conic in standard position. A circle uses
/// a as its radius (b must equal a); a parabola y^2 = 4 a x ignores b.
struct ConicParam {
  ConicShape shape = ConicShape::Ellipse;
  double a = 1.0;
  double b = 1.0;

  /// DomainError for non-positive or non-finite a, b, or a circle with a != b.
  void validate() const;
  /// Implicit equation divided by its natural scale; 0 on the curve.
  double implicit_residual(double x, double y) const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// circle/ellipse: (a(1 - t^2), 2bt) / (1 + t^2); hyperbola:
/// (a(1 + t^2), 2bt) / (1 - t^2); parabola: (a t^2, 2 a t).
/// DomainError at the hyperbola's poles t = +-1 and for non-finite t.
Point2 parametrize_conic(const ConicParam& c, double t);

/// pi a b. DomainError unless a, b > 0.
double ellipse_area(double a, double b);

enum class EllipticMethod { Agm, Simpson };

/// Complete elliptic integral of the second kind, E(m) = int_0^{pi/2}
/// sqrt(1 - m sin^2 t) dt, for 0 <= m <= 1. Simpson uses `tolerance`
/// as its absolute target.
double complete_elliptic_e(double m, EllipticMethod method = EllipticMethod::Agm, double tolerance = 1e-13);

/// 4 a E(e^2) with e^2 = (a^2 - b^2)/a^2. DomainError unless a >= b > 0.
double ellipse_perimeter(double a, double b, EllipticMethod method = EllipticMethod::Agm,
                         double tolerance = 1e-13);

}  // namespace klasika
