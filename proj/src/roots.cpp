#include "klasika/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "klasika/disc.hpp"
#include "klasika/error.hpp"

namespace klasika {

DepressedPolynomial depress(const Polynomial& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("depress needs degree >= 2, got " + std::to_string(n));
  const Polynomial g = monic(f);
  const Rational shift = g.coeff(n - 1) / Rational(n);
  // x = y - shift
  return {poly_shift(g, -shift), shift};
}

double residual_tolerance(const Polynomial& f, double relative) {
  double norm1 = 0.0;
  for (const auto& c : f.coefficients()) norm1 += std::abs(c.to_double());
  return relative * (1.0 + norm1);
}

std::pair<Complex, Complex> solve_quadratic(const Polynomial& f) {
  if (f.degree() != 2) throw DomainError("solve_quadratic needs degree 2, got " + std::to_string(f.degree()));
  const Rational a = f.coeff(2);
  const Rational b = f.coeff(1);
  const Rational c = f.coeff(0);
  const Rational disc = b * b - Rational(4) * a * c;
  const double ad = a.to_double();
  const double bd = b.to_double();
  if (disc.sign() < 0) {
    const double re = -bd / (2.0 * ad);
    const double im = std::abs(std::sqrt(-disc.to_double()) / (2.0 * ad));
    return {Complex(re, im), Complex(re, -im)};
  }
  const double sq = std::sqrt(disc.to_double());
  if (b.is_zero()) {
    const double r = sq / (2.0 * std::abs(ad));
    return {Complex(r, 0.0), Complex(-r, 0.0)};
  }
  // Avoid cancellation: q = -(b + sign(b) sqrt(disc))/2, roots q/a and c/q.
  const double q = -0.5 * (bd + std::copysign(sq, bd));
  Complex r1(q / ad, 0.0);
  Complex r2 = q != 0.0 ? Complex(c.to_double() / q, 0.0) : Complex(0.0, 0.0);
  if (r1.real() < r2.real()) std::swap(r1, r2);
  return {r1, r2};
}

CubicRoots solve_cubic_cardano(const Polynomial& f) {
  if (f.degree() != 3) throw DomainError("solve_cubic_cardano needs degree 3, got " + std::to_string(f.degree()));
  CubicRoots out;
  out.depressed = depress(f);
  const Rational a = out.depressed.poly.coeff(1);
  const Rational b = out.depressed.poly.coeff(0);
  out.discriminant_sign = discriminant_resultant(f).sign();

  // Z^2 + b Z - a^3/27 = 0 has roots u^3, v^3.
  const Rational inner = b * b / Rational(4) + a * a * a / Rational(27);
  const Complex root_inner = std::sqrt(Complex(inner.to_double(), 0.0));
  const Complex half_b(-b.to_double() / 2.0, 0.0);
  Complex cube = half_b + root_inner;
  const Complex other = half_b - root_inner;
  // Either root of the resolvent quadratic may play u^3; the larger one
  // avoids cancellation.
  if (std::abs(other) > std::abs(cube)) cube = other;

  const double ad = a.to_double();
  if (std::abs(cube) > 0.0) {
    out.u = std::pow(cube, 1.0 / 3.0);
    out.v = -ad / (3.0 * out.u);
  } else {
    out.u = 0.0;
    const double rhs = -b.to_double();
    out.v = std::pow(Complex(rhs, 0.0), 1.0 / 3.0);
  }
  out.epsilon = Complex(-0.5, std::sqrt(3.0) / 2.0);
  const Complex eps = out.epsilon;
  const Complex eps2 = eps * eps;
  const double shift = out.depressed.shift.to_double();
  out.roots = {out.u + out.v - shift, eps * out.u + eps2 * out.v - shift, eps2 * out.u + eps * out.v - shift};

  if (out.discriminant_sign > 0) {
    const Polynomial df = poly_derivative(f);
    for (auto& r : out.roots) {
      const Complex d = df.evaluate(r);
      if (std::abs(d) == 0.0) continue;
      const Complex refined = r - f.evaluate(r) / d;
      if (std::abs(f.evaluate(refined)) <= std::abs(f.evaluate(r))) r = refined;
    }
  }
  if (out.discriminant_sign >= 0) {
    for (auto& r : out.roots) {
      if (std::abs(r.imag()) < 1e-9 * std::max(1.0, std::abs(r))) r = Complex(r.real(), 0.0);
    }
  }
  for (std::size_t i = 0; i < 3; ++i) out.residuals[i] = std::abs(f.evaluate(out.roots[i]));
  return out;
}

std::vector<Complex> roots_of_unity(int n) {
  if (n < 1) throw DomainError("roots_of_unity needs n >= 1, got " + std::to_string(n));
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // Quarter turns are exact.
    if ((4 * static_cast<long>(k)) % n == 0) {
      static constexpr std::array<Complex, 4> quarter{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
      out.push_back(quarter[static_cast<std::size_t>(4 * static_cast<long>(k) / n)]);
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * k / n;
    out.emplace_back(std::cos(angle), std::sin(angle));
  }
  return out;
}

}  // namespace klasika
