#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klasika/matrix.hpp"
#include "klasika/polynomial.hpp"

namespace klasika {

/// a x^2 + b xy + c y^2
struct BinaryForm {
  Rational a;
  Rational b;
  Rational c;

  Rational operator()(const Rational& x, const Rational& y) const { return a * x * x + b * x * y + c * y * y; }
  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) { return {f.a + g.a, f.b + g.b, f.c + g.c}; }
  friend BinaryForm operator*(const Rational& k, const BinaryForm& f) { return {k * f.a, k * f.b, k * f.c}; }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// a x^2 + b y^2 + c z^2 + 2d xy + 2e xz + 2f yz.
///
/// The cross coefficients are stored halved, so (d, e, f) are exactly the
/// off-diagonal entries of the matrix. Use from_equation() to build a form
/// from the coefficients as they appear in the written polynomial.
struct TernaryForm {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
  Rational e;
  Rational f;

  /// From a x^2 + b y^2 + c z^2 + xy_coeff xy + xz_coeff xz + yz_coeff yz.
  static TernaryForm from_equation(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& xy_coeff, const Rational& xz_coeff, const Rational& yz_coeff);

  bool is_zero() const;
  Rational operator()(const Rational& x, const Rational& y, const Rational& z) const;
  double evaluate(const std::array<double, 3>& v) const;
  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
};

/// Symmetric 2x2 or 3x3 rational matrix.
class SymMatrix {
 public:
  /// DomainError unless `m` is 2x2 or 3x3 and exactly symmetric.
  explicit SymMatrix(RationalMatrix m);

  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const RationalMatrix& matrix() const { return m_; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  RationalMatrix m_;
};

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  int plus = 0;
  int minus = 0;
  int zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string to_string() const;
};

enum class ConicKind { Ellipse, Hyperbola, Parabola, Circle, Degenerate, Empty };

enum class QuadricKind {
  Ellipsoid,
  EllipticParaboloid,
  HyperboloidOneSheet,
  HyperboloidTwoSheets,
  HyperbolicParaboloid,
  ParabolicCylinder,
  Other
};

std::string_view to_string(ConicKind kind);
std::string_view to_string(QuadricKind kind);

SymMatrix form_to_matrix(const BinaryForm& f);
SymMatrix form_to_matrix(const TernaryForm& f);
/// DomainError on a size mismatch.
BinaryForm matrix_to_binary_form(const SymMatrix& m);
TernaryForm matrix_to_ternary_form(const SymMatrix& m);

/// b^2 - 4ac, equal to -4 det M_f.
Rational form_discriminant(const BinaryForm& f);

/// a > 0 and discriminant < 0.
bool is_positive_definite(const BinaryForm& f);

/// The form with matrix C^T M_f C, i.e. g(x, y) = f(C (x, y)^T). C must be
/// 2x2 and may be singular.
BinaryForm transform_form(const BinaryForm& f, const RationalMatrix& c);

/// det(t I - M), exact.
Polynomial char_poly(const SymMatrix& m);

/// Exact inertia. The zero count is the multiplicity of 0 as a root of the
/// characteristic polynomial; the positive and negative counts are Descartes
/// sign variations of the deflated polynomial p(t) and p(-t), which are exact
/// because a symmetric matrix has only real eigenvalues.
Inertia inertia(const SymMatrix& m);
/// Same, for a general matrix; DomainError if it is not symmetric.
Inertia inertia(const RationalMatrix& m);

/// Number of sign changes in the nonzero coefficients of p.
int sign_variations(const Polynomial& p);

struct ConicClassification {
  ConicKind kind = ConicKind::Degenerate;
  /// Inertia of the quadratic part [[a, b/2], [b/2, c]].
  Inertia quadratic_inertia;
  /// det of the quadratic part.
  Rational quadratic_det;
  /// det of the 3x3 matrix of a x^2 + b xy + c y^2 + d x + e y - lambda.
  Rational full_det;
  /// Right-hand side after moving the centre to the origin (only when the
  /// quadratic part is nonsingular): X^T Q X = translated_constant.
  std::optional<Rational> translated_constant;
};

/// Classifies a x^2 + b xy + c y^2 + d x + e y = lambda exactly over Q.
/// DomainError if a = b = c = 0.
ConicClassification analyze_conic(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                  const Rational& e, const Rational& lambda);
ConicKind classify_conic(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         const Rational& e, const Rational& lambda);

struct QuadricClassification {
  Inertia inertia;
  QuadricKind kind = QuadricKind::Other;
  /// Set when the form is singular: F = h then describes a cylinder over a
  /// conic or a plane pair, which the inertia table alone does not show.
  std::optional<std::string> degeneracy_note;
};

/// Maps the inertia of M_F through the table
/// (3,0,0) ellipsoid, (2,0,1) elliptic paraboloid, (2,1,0) hyperboloid of one
/// sheet, (1,2,0) hyperboloid of two sheets, (1,1,1) hyperbolic paraboloid,
/// (1,0,2) parabolic cylinder; anything else is Other. DomainError on F = 0.
QuadricClassification classify_quadric(const TernaryForm& f);

/// Orthogonal diagonalization M = S diag(D) S^T with eigenvectors in the
/// columns of S. (Equivalently M = Q^T D Q with Q = S^T.)
struct Diagonalization {
  std::vector<std::vector<double>> s;  ///< n x n, row-major
  std::vector<double> d;
  double residual = 0.0;           ///< max |S diag(D) S^T - M|
  double orthogonality_error = 0.0;  ///< max |S^T S - I|
};

/// Eigenvalues come from the exact characteristic polynomial: rational ones
/// (with multiplicity) exactly, the remaining simple irrational ones from the
/// quadratic or Cardano solver. Eigenvectors are null-space bases of M - tI
/// (exact for rational t), orthonormalized by Gram-Schmidt. Columns are
/// ordered and signed so that each column's diagonal entry is as large as
/// possible and nonnegative, so a diagonal M gives S = I.
Diagonalization orthogonal_diagonalize(const SymMatrix& m);

/// Substitution x' = Q x (Q = S^T, orthogonal) under which F becomes
/// sum_i coefficients[i] * x'_i^2.
struct DiagonalSubstitution {
  std::array<std::array<double, 3>, 3> substitution{};
  std::array<double, 3> coefficients{};
};

DiagonalSubstitution diagonal_substitution(const TernaryForm& f);

}  // namespace klasika
