#pragma once

#include <array>
#include <utility>
#include <vector>

#include "klasika/polynomial.hpp"

namespace klasika {

/// Monic polynomial without an x^{n-1} term, obtained from f by x = y - shift.
struct DepressedPolynomial {
  Polynomial poly;
  Rational shift;  ///< a_{n-1}/n of the monic input
};

/// Depresses f (degree >= 2). Exact; poly(x + shift) == monic(f)(x).
DepressedPolynomial depress(const Polynomial& f);

/// Roots of a degree-2 polynomial; a conjugate pair (positive imaginary part
/// first) when the discriminant is negative.
std::pair<Complex, Complex> solve_quadratic(const Polynomial& f);

/// Cardano solution of a cubic.
///
/// With y^3 + a y + b the depressed cubic, u is a cube root of
/// -b/2 + sqrt(b^2/4 + a^3/27) and v = -a/(3u), so u v = -a/3 holds by
/// construction. The roots are y1 = u + v, y2 = eps u + eps^2 v,
/// y3 = eps^2 u + eps v with eps = (-1 + i sqrt 3)/2, shifted back to x.
struct CubicRoots {
  std::array<Complex, 3> roots;
  std::array<double, 3> residuals{};  ///< |f(root)|
  Complex u;
  Complex v;
  Complex epsilon;
  DepressedPolynomial depressed;
  /// Exact sign of the cubic's discriminant.
  int discriminant_sign = 0;
};

CubicRoots solve_cubic_cardano(const Polynomial& f);

/// Default residual tolerance for user-supplied coefficients: 1e-8 (1 + ||f||_1).
double residual_tolerance(const Polynomial& f, double relative = 1e-8);

/// The n points (cos 2 pi k/n, sin 2 pi k/n), k = 0..n-1; the first is exactly 1.
std::vector<Complex> roots_of_unity(int n);

}  // namespace klasika
