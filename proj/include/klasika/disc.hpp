#pragma once

#include <vector>

#include "klasika/matrix.hpp"
#include "klasika/polynomial.hpp"

namespace klasika {

/// S_0, S_1, ..., S_m: sums of the mu-th powers of the roots.
struct PowerSums {
  std::vector<Rational> values;

  const Rational& operator[](std::size_t mu) const { return values[mu]; }
  std::size_t size() const { return values.size(); }
};

/// Exact determinant (Bareiss).
Rational determinant(const RationalMatrix& m);

/// Power sums of the roots of f, from the coefficients alone via Newton's
/// identities with sigma_nu = (-1)^nu a_{n-nu} of the monic form of f.
PowerSums power_sums(const Polynomial& f, int m);

/// (deg f + deg g) square Sylvester matrix; rows of f's coefficients (highest
/// first) shifted deg g times, then g's shifted deg f times.
RationalMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g);
Rational resultant(const Polynomial& f, const Polynomial& g);

/// Discriminant in the (-1)^{n(n-1)/2} a_n^{2n-2} prod_{i != j}(a_i - a_j)
/// normalization (so a x^2 + b x + c gives b^2 - 4ac), computed as
/// (-1)^{n(n-1)/2} Res(f, f')/a_n. Degree >= 2.
Rational discriminant_resultant(const Polynomial& f);

/// The n x n Hankel matrix [S_{i+j}] of power sums of f's roots.
RationalMatrix hankel_power_sum_matrix(const Polynomial& f);

/// det of the Hankel power-sum matrix of monic(f): the squared Vandermonde
/// determinant prod_{i<j}(a_i - a_j)^2.
Rational hankel_determinant(const Polynomial& f);

/// prod over ordered pairs i != j of (a_i - a_j) for monic(f), recovered
/// from the Hankel determinant: each unordered pair contributes
/// (a_i - a_j)(a_j - a_i) = -(a_i - a_j)^2.
Rational ordered_pair_product(const Rational& hankel_det, int degree);

/// Converts the ordered-pair product to the discriminant normalization:
/// multiply by (-1)^{n(n-1)/2} a_n^{2n-2}.
Rational discriminant_from_ordered_pair_product(const Rational& product, const Rational& leading, int degree);

/// Discriminant through the Hankel/power-sum route; equals
/// discriminant_resultant(f) exactly. Degree >= 2.
Rational discriminant_hankel(const Polynomial& f);

/// Canonical discriminant (the resultant route).
inline Rational discriminant(const Polynomial& f) { return discriminant_resultant(f); }

/// True iff f has a repeated root. Degree >= 2 decides by discriminant == 0
/// and is cross-checked against deg gcd(f, f') >= 1; linear and nonzero
/// constant polynomials have none. DomainError on zero.
bool has_repeated_roots(const Polynomial& f);

}  // namespace klasika
