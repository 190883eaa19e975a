#include "klasika/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "klasika/error.hpp"
#include "klasika/roots.hpp"

namespace klasika {

namespace {

using Vec = std::vector<double>;

RationalMatrix checked_symmetric(RationalMatrix m) {
  if (!m.is_square() || (m.rows() != 2 && m.rows() != 3)) {
    throw DomainError("symmetric matrix must be 2x2 or 3x3");
  }
  if (!m.is_symmetric()) throw DomainError("matrix is not symmetric");
  return m;
}

double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Null space of a (nearly) singular double matrix by elimination with
// complete pivoting; `dim` is the expected nullity.
std::vector<Vec> numeric_null_space(std::vector<Vec> b, std::size_t dim) {
  const std::size_t n = b.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t steps = n - dim;
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    double best = -1.0;
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (std::abs(b[r][c]) > best) {
          best = std::abs(b[r][c]);
          pr = r;
          pc = c;
        }
      }
    }
    std::swap(b[k], b[pr]);
    if (pc != k) {
      for (auto& row : b) std::swap(row[k], row[pc]);
      std::swap(perm[k], perm[pc]);
    }
    if (b[k][k] == 0.0) break;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = b[r][k] / b[k][k];
      for (std::size_t c = k; c < n; ++c) b[r][c] -= factor * b[k][c];
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free = steps; free < n; ++free) {
    Vec x(n, 0.0);
    x[free] = 1.0;
    for (std::size_t i = steps; i-- > 0;) {
      double s = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) s += b[i][j] * x[j];
      x[i] = b[i][i] == 0.0 ? 0.0 : -s / b[i][i];
    }
    Vec out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out[perm[i]] = x[i];
    basis.push_back(std::move(out));
  }
  return basis;
}

// Refines a simple real root of p by Newton steps in long double.
double polish_root(const Polynomial& p, double x0) {
  const Polynomial dp = poly_derivative(p);
  long double x = x0;
  for (int it = 0; it < 4; ++it) {
    const long double d = dp.evaluate(x);
    if (d == 0.0L) break;
    const long double step = p.evaluate(x) / d;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return static_cast<double>(x);
}

struct EigenPart {
  double value;
  std::vector<Vec> vectors;
};

}  // namespace

TernaryForm TernaryForm::from_equation(const Rational& a, const Rational& b, const Rational& c,
                                       const Rational& xy_coeff, const Rational& xz_coeff,
                                       const Rational& yz_coeff) {
  const Rational half(1, 2);
  return {a, b, c, half * xy_coeff, half * xz_coeff, half * yz_coeff};
}

bool TernaryForm::is_zero() const {
  return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() && e.is_zero() && f.is_zero();
}

Rational TernaryForm::operator()(const Rational& x, const Rational& y, const Rational& z) const {
  const Rational two(2);
  return a * x * x + b * y * y + c * z * z + two * (d * x * y + e * x * z + f * y * z);
}

double TernaryForm::evaluate(const std::array<double, 3>& v) const {
  const double x = v[0], y = v[1], z = v[2];
  return a.to_double() * x * x + b.to_double() * y * y + c.to_double() * z * z +
         2.0 * (d.to_double() * x * y + e.to_double() * x * z + f.to_double() * y * z);
}

SymMatrix::SymMatrix(RationalMatrix m) : m_(checked_symmetric(std::move(m))) {}

std::string Inertia::to_string() const {
  return "(" + std::to_string(plus) + ", " + std::to_string(minus) + ", " + std::to_string(zero) + ")";
}

std::string_view to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::Ellipse: return "Ellipse";
    case ConicKind::Hyperbola: return "Hyperbola";
    case ConicKind::Parabola: return "Parabola";
    case ConicKind::Circle: return "Circle";
    case ConicKind::Degenerate: return "Degenerate";
    case ConicKind::Empty: return "Empty";
  }
  return "Unknown";
}

std::string_view to_string(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::Ellipsoid: return "Ellipsoid";
    case QuadricKind::EllipticParaboloid: return "EllipticParaboloid";
    case QuadricKind::HyperboloidOneSheet: return "HyperboloidOneSheet";
    case QuadricKind::HyperboloidTwoSheets: return "HyperboloidTwoSheets";
    case QuadricKind::HyperbolicParaboloid: return "HyperbolicParaboloid";
    case QuadricKind::ParabolicCylinder: return "ParabolicCylinder";
    case QuadricKind::Other: return "Other";
  }
  return "Unknown";
}

SymMatrix form_to_matrix(const BinaryForm& f) {
  const Rational h = f.b / Rational(2);
  return SymMatrix(RationalMatrix{{f.a, h}, {h, f.c}});
}

SymMatrix form_to_matrix(const TernaryForm& f) {
  return SymMatrix(RationalMatrix{{f.a, f.d, f.e}, {f.d, f.b, f.f}, {f.e, f.f, f.c}});
}

BinaryForm matrix_to_binary_form(const SymMatrix& m) {
  if (m.size() != 2) throw DomainError("binary form needs a 2x2 matrix");
  return {m(0, 0), Rational(2) * m(0, 1), m(1, 1)};
}

TernaryForm matrix_to_ternary_form(const SymMatrix& m) {
  if (m.size() != 3) throw DomainError("ternary form needs a 3x3 matrix");
  return {m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2)};
}

Rational form_discriminant(const BinaryForm& f) { return f.b * f.b - Rational(4) * f.a * f.c; }

bool is_positive_definite(const BinaryForm& f) { return f.a.sign() > 0 && form_discriminant(f).sign() < 0; }

BinaryForm transform_form(const BinaryForm& f, const RationalMatrix& c) {
  if (c.rows() != 2 || c.cols() != 2) throw DomainError("transform matrix must be 2x2");
  const RationalMatrix m = form_to_matrix(f).matrix();
  return matrix_to_binary_form(SymMatrix(c.transpose() * m * c));
}

Polynomial char_poly(const SymMatrix& m) {
  if (m.size() == 2) {
    const Rational tr = m(0, 0) + m(1, 1);
    const Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return Polynomial{det, -tr, Rational(1)};
  }
  const RationalMatrix& a = m.matrix();
  const Rational tr = a(0, 0) + a(1, 1) + a(2, 2);
  const Rational minors = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) +
                          a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  const Rational det = bareiss_determinant(a);
  return Polynomial{-det, minors, -tr, Rational(1)};
}

int sign_variations(const Polynomial& p) {
  int changes = 0;
  int last = 0;
  for (const Rational& c : p.coefficients()) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Inertia inertia(const SymMatrix& m) {
  const Polynomial p = char_poly(m);
  const auto coeffs = p.coefficients();
  int zeros = 0;
  while (zeros < p.degree() && coeffs[static_cast<std::size_t>(zeros)].is_zero()) ++zeros;
  const Polynomial deflated(std::vector<Rational>(coeffs.begin() + zeros, coeffs.end()));
  Inertia out;
  out.zero = zeros;
  out.plus = sign_variations(deflated);
  out.minus = sign_variations(poly_reflect(deflated));
  return out;
}

Inertia inertia(const RationalMatrix& m) { return inertia(SymMatrix(m)); }

ConicClassification analyze_conic(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                  const Rational& e, const Rational& lambda) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    throw DomainError("not a conic: the quadratic part is zero");
  }
  const Rational two(2);
  const Rational hb = b / two, hd = d / two, he = e / two;
  const RationalMatrix full{{a, hb, hd}, {hb, c, he}, {hd, he, -lambda}};

  ConicClassification out;
  const SymMatrix q(RationalMatrix{{a, hb}, {hb, c}});
  out.quadratic_inertia = inertia(q);
  out.quadratic_det = a * c - hb * hb;
  out.full_det = bareiss_determinant(full);

  const int det_sign = out.quadratic_det.sign();
  if (det_sign != 0) {
    // Centred: X^T Q X = k with k = -det(full)/det(Q).
    const Rational k = -out.full_det / out.quadratic_det;
    out.translated_constant = k;
    if (det_sign < 0) {
      out.kind = k.is_zero() ? ConicKind::Degenerate : ConicKind::Hyperbola;
    } else {
      const int definite_sign = (a + c).sign();
      if (k.is_zero()) {
        out.kind = ConicKind::Degenerate;
      } else if (k.sign() == definite_sign) {
        out.kind = (b.is_zero() && a == c) ? ConicKind::Circle : ConicKind::Ellipse;
      } else {
        out.kind = ConicKind::Empty;
      }
    }
    return out;
  }
  if (!out.full_det.is_zero()) {
    out.kind = ConicKind::Parabola;
    return out;
  }
  // One zero eigenvalue and no linear term along its direction: in the
  // eigenframe mu X^2 + p X = lambda, and k2 = -(p^2 + 4 mu lambda)/4.
  const Rational k2 = (-a * lambda - hd * hd) + (-c * lambda - he * he);
  out.kind = k2.sign() > 0 ? ConicKind::Empty : ConicKind::Degenerate;
  return out;
}

ConicKind classify_conic(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         const Rational& e, const Rational& lambda) {
  return analyze_conic(a, b, c, d, e, lambda).kind;
}

QuadricClassification classify_quadric(const TernaryForm& f) {
  if (f.is_zero()) throw DomainError("zero quadratic form");
  QuadricClassification out;
  out.inertia = inertia(form_to_matrix(f));
  const Inertia& in = out.inertia;
  auto is = [&](int p, int m, int z) { return in == Inertia{p, m, z}; };
  if (is(3, 0, 0)) {
    out.kind = QuadricKind::Ellipsoid;
  } else if (is(2, 0, 1)) {
    out.kind = QuadricKind::EllipticParaboloid;
  } else if (is(2, 1, 0)) {
    out.kind = QuadricKind::HyperboloidOneSheet;
  } else if (is(1, 2, 0)) {
    out.kind = QuadricKind::HyperboloidTwoSheets;
  } else if (is(1, 1, 1)) {
    out.kind = QuadricKind::HyperbolicParaboloid;
  } else if (is(1, 0, 2)) {
    out.kind = QuadricKind::ParabolicCylinder;
  } else {
    out.kind = QuadricKind::Other;
  }
  if (in.zero > 0) {
    const int rank = 3 - in.zero;
    std::string note = "form has rank " + std::to_string(rank) + "; with no linear terms F = h is ";
    if (rank == 1) {
      note += "a pair of parallel planes (or one plane, or empty), not a parabolic cylinder";
    } else if (in.plus == 2 || in.minus == 2) {
      note += "an elliptic cylinder (or a line, or empty), not a paraboloid";
    } else {
      note += "a hyperbolic cylinder (or a pair of intersecting planes), not a paraboloid";
    }
    out.degeneracy_note = std::move(note);
  }
  return out;
}

Diagonalization orthogonal_diagonalize(const SymMatrix& m) {
  const std::size_t n = m.size();
  const Polynomial p = char_poly(m);
  std::vector<EigenPart> parts;

  Polynomial residual = p;
  for (const RationalRoot& r : rational_roots(p)) {
    residual = poly_divmod(residual, poly_pow(Polynomial::linear_root(r.value), r.multiplicity)).first;
    RationalMatrix shifted = m.matrix();
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= r.value;
    EigenPart part{r.value.to_double(), {}};
    for (const auto& v : null_space(shifted)) {
      Vec x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = v[i].to_double();
      part.vectors.push_back(std::move(x));
    }
    if (part.vectors.size() != static_cast<std::size_t>(r.multiplicity)) {
      throw std::logic_error("eigenspace dimension differs from multiplicity for a symmetric matrix");
    }
    parts.push_back(std::move(part));
  }

  std::vector<double> irrational;
  if (residual.degree() == 2) {
    const auto [r1, r2] = solve_quadratic(residual);
    irrational = {r1.real(), r2.real()};
  } else if (residual.degree() == 3) {
    const CubicRoots cr = solve_cubic_cardano(residual);
    for (const Complex& z : cr.roots) irrational.push_back(z.real());
  } else if (residual.degree() > 0) {
    throw std::logic_error("unexpected residual characteristic factor");
  }
  for (double t : irrational) {
    const double lam = polish_root(residual, t);
    std::vector<Vec> b(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i][j] = m(i, j).to_double() - (i == j ? lam : 0.0);
    }
    parts.push_back({lam, numeric_null_space(std::move(b), 1)});
  }

  // Gram-Schmidt, applied twice for stability.
  std::vector<Vec> cols;
  std::vector<double> vals;
  for (const auto& part : parts) {
    for (const auto& v : part.vectors) {
      cols.push_back(v);
      vals.push_back(part.value);
    }
  }
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const double proj = dot(cols[k], cols[j]);
        for (std::size_t i = 0; i < n; ++i) cols[k][i] -= proj * cols[j][i];
      }
      const double norm = std::sqrt(dot(cols[k], cols[k]));
      for (double& x : cols[k]) x /= norm;
    }
  }

  // Column order and sign: maximize the diagonal of S, then make it >= 0.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> best = order;
  double best_score = -1.0;
  do {
    double score = 0.0;
    for (std::size_t j = 0; j < n; ++j) score += std::abs(cols[order[j]][j]);
    if (score > best_score + 1e-12) {
      best_score = score;
      best = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  Diagonalization out;
  out.s.assign(n, Vec(n, 0.0));
  out.d.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = cols[best[j]];
    double pivot = v[j];
    if (std::abs(pivot) < 1e-12) {
      for (double x : v) {
        if (std::abs(x) > 1e-12) {
          pivot = x;
          break;
        }
      }
    }
    if (pivot < 0) {
      for (double& x : v) x = -x;
    }
    for (std::size_t i = 0; i < n; ++i) out.s[i][j] = v[i];
    out.d[j] = vals[best[j]];
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double rec = 0.0;
      double gram = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        rec += out.s[i][k] * out.d[k] * out.s[j][k];
        gram += out.s[k][i] * out.s[k][j];
      }
      out.residual = std::max(out.residual, std::abs(rec - m(i, j).to_double()));
      out.orthogonality_error = std::max(out.orthogonality_error, std::abs(gram - (i == j ? 1.0 : 0.0)));
    }
  }
  return out;
}

DiagonalSubstitution diagonal_substitution(const TernaryForm& f) {
  const Diagonalization dz = orthogonal_diagonalize(form_to_matrix(f));
  DiagonalSubstitution out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.coefficients[i] = dz.d[i];
    for (std::size_t j = 0; j < 3; ++j) out.substitution[i][j] = dz.s[j][i];
  }
  return out;
}

}  // namespace klasika
