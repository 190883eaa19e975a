#include "klasika/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <string>
#include <numbers>

#include "klasika/error.hpp"
#include "klasika/matrix.hpp"

namespace klasika {

namespace {

// Yun's square-free decomposition of a monic f: f = prod a_i^i.
std::vector<Polynomial> squarefree_parts(const Polynomial& f) {
  const Polynomial fp = poly_derivative(f);
  const Polynomial b = poly_gcd(f, fp);
  Polynomial c = poly_divmod(f, b).first;
  Polynomial d = poly_divmod(fp, b).first - poly_derivative(c);
  std::vector<Polynomial> out;
  while (c.degree() > 0) {
    const Polynomial a = poly_gcd(c, d);
    out.push_back(a);
    c = poly_divmod(c, a).first;
    d = poly_divmod(d, a).first - poly_derivative(c);
  }
  return out;
}

Polynomial x_minus(const Rational& r) { return Polynomial::linear_root(r); }

struct Piece {
  bool negative = false;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      out += pieces[i].negative ? "-" : "";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

Piece scaled(const Rational& c, const std::string& body) {
  const Rational m = abs(c);
  return {c.sign() < 0, m == Rational(1) ? body : m.to_string() + "*" + body};
}

// c / factor^e, with factor a rendered linear polynomial.
Piece over_power(const Rational& c, const std::string& factor, int e) {
  std::string den = factor == "x" ? factor : "(" + factor + ")";
  if (e > 1) den += "^" + std::to_string(e);
  const Integer n = abs(c).numerator();
  const Integer d = c.denominator();
  std::string body = n.get_str() + "/";
  body += d == 1 ? den : "(" + d.get_str() + "*" + den + ")";
  return {c.sign() < 0, body};
}

// N = k^2 r with r as square-free as cheap trial division gets it.
void split_square(Integer n, Integer& k, Integer& r) {
  k = 1;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    const Integer pp = p * p;
    while (n % pp == 0) {
      n /= pp;
      k *= p;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    k *= s;
    n = 1;
  }
  r = n;
}

// Complex roots of a square-free f by Aberth iteration.
std::vector<std::complex<long double>> aberth_roots(const Polynomial& f) {
  using C = std::complex<long double>;
  const int n = f.degree();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  long double bound = 0.0L;
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i).to_long_double();
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
  bound += 1.0L;
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(bound * 0.5L, 0.4L + 2.0L * std::numbers::pi_v<long double> * k / n);
  auto eval = [&](C x, C& dp) {
    C v = 0.0L;
    dp = 0.0L;
    for (int i = n; i >= 0; --i) {
      dp = dp * x + v;
      v = v * x + c[static_cast<std::size_t>(i)];
    }
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    long double moved = 0.0L;
    for (int k = 0; k < n; ++k) {
      C dp;
      const C v = eval(z[static_cast<std::size_t>(k)], dp);
      if (v == C(0.0L)) continue;
      const C ratio = v / dp;
      C sum = 0.0L;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      }
      const C step = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(k)] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

// Splits a monic square-free a without rational roots into irreducible
// quadratics with complex roots. Candidates come from conjugate root pairs;
// every factor is confirmed by exact division.
std::vector<QuadraticFactor> split_quadratics(const Polynomial& a, int multiplicity) {
  const Integer lead = primitive_part(a).leading().numerator();
  Polynomial rest = a;
  std::vector<QuadraticFactor> out;
  const auto roots = aberth_roots(a);
  for (const auto& z : roots) {
    if (rest.degree() <= 0) break;
    if (z.imag() <= 0.0L) continue;
    const long double lp = -2.0L * z.real() * lead.get_d();
    const long double lq = std::norm(z) * lead.get_d();
    if (!std::isfinite(lp) || !std::isfinite(lq) || std::abs(lp) > 1e17L || std::abs(lq) > 1e17L) continue;
    const Rational p(Integer(std::to_string(std::llround(lp))), lead);
    const Rational q(Integer(std::to_string(std::llround(lq))), lead);
    if ((p * p - Rational(4) * q).sign() >= 0) continue;
    const Polynomial cand{q, p, Rational(1)};
    auto [quot, rem] = poly_divmod(rest, cand);
    if (!rem.is_zero()) continue;
    out.push_back({p, q, multiplicity});
    rest = std::move(quot);
  }
  if (rest.degree() > 0) {
    throw UnsupportedFactorization("factor " + a.to_string() +
                                   " has no rational root and does not split into quadratics over Q");
  }
  return out;
}

Piece render_arctan(const term::Arctan& t) {
  const Integer n = t.scale_squared.numerator();
  const Integer d = t.scale_squared.denominator();
  Integer k, r;
  split_square(n * d, k, r);
  // s = k sqrt(r) / d
  const Rational coeff = t.coefficient * Rational(d, k * r);
  const bool has_root = r != 1;
  const Rational c = has_root ? coeff : coeff * Rational(r);
  const Integer u = t.shift.numerator();
  const Integer v = t.shift.denominator();
  Integer alpha = d * v;
  Integer beta = d * u;
  Integer gamma = v * k;
  Integer g;
  mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), gamma.get_mpz_t());
  if (beta != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(beta)).get_mpz_t());
  alpha /= g;
  beta /= g;
  gamma /= g;
  std::string arg = Polynomial{Rational(beta), Rational(alpha)}.to_compact_string();
  const std::string root = "sqrt(" + r.get_str() + ")";
  if (has_root || gamma != 1) {
    if (beta != 0) arg = "(" + arg + ")";
    if (!has_root) {
      arg += "/" + gamma.get_str();
    } else if (gamma == 1) {
      arg += "/" + root;
    } else {
      arg += "/(" + gamma.get_str() + "*" + root + ")";
    }
  }
  std::string body = "arctan(" + arg + ")";
  if (has_root) body = root + "*" + body;
  return scaled(c, body);
}

}  // namespace

Polynomial RealFactorization::expand() const {
  Polynomial out = Polynomial::constant(constant);
  for (const auto& f : linear_factors) out *= poly_pow(x_minus(f.root), f.multiplicity);
  for (const auto& f : quadratic_factors) out *= poly_pow(f.polynomial(), f.multiplicity);
  return out;
}

RealFactorization factor_real(const Polynomial& q) {
  if (q.is_zero()) throw DomainError("cannot factor the zero polynomial");
  RealFactorization out;
  out.constant = q.leading();
  Polynomial residual = monic(q);
  if (q.degree() >= 1) {
    for (const RationalRoot& r : rational_roots(q)) {
      out.linear_factors.push_back({r.value, r.multiplicity});
      residual = poly_divmod(residual, poly_pow(x_minus(r.value), r.multiplicity)).first;
    }
  }
  if (residual.degree() <= 0) return out;
  const std::vector<Polynomial> parts = squarefree_parts(residual);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Polynomial& a = parts[i];
    if (a.degree() == 0) continue;
    if (a.degree() == 2) {
      const Rational p = a.coeff(1);
      const Rational c = a.coeff(0);
      if ((p * p - Rational(4) * c).sign() < 0) {
        out.quadratic_factors.push_back({p, c, static_cast<int>(i) + 1});
        continue;
      }
      throw UnsupportedFactorization("factor " + a.to_string() + " has irrational real roots");
    }
    for (auto& f : split_quadratics(a, static_cast<int>(i) + 1)) out.quadratic_factors.push_back(std::move(f));
  }
  std::sort(out.quadratic_factors.begin(), out.quadratic_factors.end(),
            [](const QuadraticFactor& x, const QuadraticFactor& y) {
              return x.p != y.p ? x.p < y.p : x.q < y.q;
            });
  return out;
}

PartialFractions partial_fractions(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DomainError("zero denominator");
  const RealFactorization fq = factor_real(q);
  for (const auto& f : fq.quadratic_factors) {
    if (f.multiplicity > 1) {
      throw UnsupportedError("repeated quadratic factor (" + f.polynomial().to_string() + ")^" +
                             std::to_string(f.multiplicity));
    }
  }
  auto [quot, rem] = poly_divmod(p, q);
  PartialFractions out;
  out.polynomial_part = std::move(quot);
  if (rem.is_zero()) return out;

  const Polynomial den = monic(q);
  const Polynomial target = rem * (Rational(1) / fq.constant);
  struct Unknown {
    int linear = -1;  // index into linear factors, or -1
    int power = 0;
    int quadratic = -1;
    bool x_coeff = false;
  };
  std::vector<Polynomial> basis;
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < fq.linear_factors.size(); ++i) {
    const auto& f = fq.linear_factors[i];
    for (int k = 1; k <= f.multiplicity; ++k) {
      basis.push_back(poly_divmod(den, poly_pow(x_minus(f.root), k)).first);
      unknowns.push_back({static_cast<int>(i), k, -1, false});
    }
  }
  for (std::size_t i = 0; i < fq.quadratic_factors.size(); ++i) {
    const Polynomial cof = poly_divmod(den, fq.quadratic_factors[i].polynomial()).first;
    basis.push_back(cof * Polynomial::monomial(1, 1));
    unknowns.push_back({-1, 0, static_cast<int>(i), true});
    basis.push_back(cof);
    unknowns.push_back({-1, 0, static_cast<int>(i), false});
  }
  const std::size_t n = basis.size();
  RationalMatrix m(n, n);
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = target.coeff(static_cast<int>(i));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = basis[j].coeff(static_cast<int>(i));
  }
  const std::vector<Rational> sol = solve_linear(m, rhs);

  std::vector<QuadraticTerm> quads(fq.quadratic_factors.size());
  for (std::size_t i = 0; i < quads.size(); ++i) {
    quads[i].p = fq.quadratic_factors[i].p;
    quads[i].q = fq.quadratic_factors[i].q;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Unknown& u = unknowns[j];
    if (u.linear >= 0) {
      if (!sol[j].is_zero()) {
        out.linear_terms.push_back({sol[j], fq.linear_factors[static_cast<std::size_t>(u.linear)].root, u.power});
      }
    } else if (u.x_coeff) {
      quads[static_cast<std::size_t>(u.quadratic)].b = sol[j];
    } else {
      quads[static_cast<std::size_t>(u.quadratic)].c = sol[j];
    }
  }
  for (auto& t : quads) {
    if (!t.b.is_zero() || !t.c.is_zero()) out.quadratic_terms.push_back(std::move(t));
  }
  return out;
}

std::pair<Polynomial, Polynomial> PartialFractions::recombine() const {
  std::vector<std::pair<Rational, int>> roots;
  for (const auto& t : linear_terms) {
    auto it = std::find_if(roots.begin(), roots.end(), [&](const auto& r) { return r.first == t.root; });
    if (it == roots.end()) {
      roots.emplace_back(t.root, t.power);
    } else {
      it->second = std::max(it->second, t.power);
    }
  }
  Polynomial den = Polynomial::constant(1);
  for (const auto& [r, k] : roots) den *= poly_pow(x_minus(r), k);
  for (const auto& t : quadratic_terms) den *= Polynomial{t.q, t.p, Rational(1)};
  Polynomial num = polynomial_part * den;
  for (const auto& t : linear_terms) num += t.coefficient * poly_divmod(den, poly_pow(x_minus(t.root), t.power)).first;
  for (const auto& t : quadratic_terms) {
    num += Polynomial{t.c, t.b} * poly_divmod(den, Polynomial{t.q, t.p, Rational(1)}).first;
  }
  return {num, den};
}

long double PartialFractions::evaluate(long double x) const {
  long double s = polynomial_part.evaluate(x);
  for (const auto& t : linear_terms) {
    s += t.coefficient.to_long_double() / std::pow(x - t.root.to_long_double(), t.power);
  }
  for (const auto& t : quadratic_terms) {
    s += (t.b.to_long_double() * x + t.c.to_long_double()) / (x * x + t.p.to_long_double() * x + t.q.to_long_double());
  }
  return s;
}

std::string PartialFractions::to_string() const {
  std::vector<Piece> pieces;
  for (int i = polynomial_part.degree(); i >= 0; --i) {
    const Rational c = polynomial_part.coeff(i);
    if (c.is_zero()) continue;
    const std::string mono = Polynomial::monomial(1, i).to_compact_string();
    pieces.push_back(i == 0 ? Piece{c.sign() < 0, abs(c).to_string()} : scaled(c, mono));
  }
  for (const auto& t : linear_terms) pieces.push_back(over_power(t.coefficient, x_minus(t.root).to_compact_string(), t.power));
  for (const auto& t : quadratic_terms) {
    const Polynomial num{t.c, t.b};
    const std::string den = "(" + Polynomial{t.q, t.p, Rational(1)}.to_compact_string() + ")";
    if (t.b.is_zero()) {
      pieces.push_back(over_power(t.c, Polynomial{t.q, t.p, Rational(1)}.to_compact_string(), 1));
    } else {
      pieces.push_back({false, "(" + num.to_compact_string() + ")/" + den});
    }
  }
  return pieces.empty() ? "0" : join(pieces);
}

SymbolicAntiderivative integrate_rational(const Polynomial& p, const Polynomial& q) {
  const PartialFractions pf = partial_fractions(p, q);
  SymbolicAntiderivative out;
  if (!pf.polynomial_part.is_zero()) out.terms.emplace_back(term::PolyTerm{poly_integral(pf.polynomial_part)});
  for (const auto& t : pf.linear_terms) {
    if (t.power == 1) out.terms.emplace_back(term::LogAbs{t.coefficient, t.root});
  }
  for (const auto& t : pf.linear_terms) {
    if (t.power > 1) {
      out.terms.emplace_back(term::PowerTerm{-t.coefficient / Rational(t.power - 1), t.root, t.power - 1});
    }
  }
  for (const auto& t : pf.quadratic_terms) {
    if (!t.b.is_zero()) out.terms.emplace_back(term::LogQuadratic{t.b / Rational(2), t.p, t.q});
  }
  for (const auto& t : pf.quadratic_terms) {
    const Rational k = t.c - t.b * t.p / Rational(2);
    const Rational half = t.p / Rational(2);
    if (!k.is_zero()) out.terms.emplace_back(term::Arctan{k, t.q - half * half, half});
  }
  return out;
}

std::string SymbolicAntiderivative::to_string() const {
  std::vector<Piece> pieces;
  for (const auto& t : terms) {
    if (const auto* poly = std::get_if<term::PolyTerm>(&t)) {
      for (int i = poly->poly.degree(); i >= 0; --i) {
        const Rational c = poly->poly.coeff(i);
        if (c.is_zero()) continue;
        if (i == 0) {
          pieces.push_back({c.sign() < 0, abs(c).to_string()});
        } else {
          pieces.push_back(scaled(c, Polynomial::monomial(1, i).to_compact_string()));
        }
      }
    } else if (const auto* lg = std::get_if<term::LogAbs>(&t)) {
      pieces.push_back(scaled(lg->coefficient, "ln|" + x_minus(lg->root).to_compact_string() + "|"));
    } else if (const auto* pw = std::get_if<term::PowerTerm>(&t)) {
      pieces.push_back(over_power(pw->coefficient, x_minus(pw->root).to_compact_string(), pw->exponent));
    } else if (const auto* lq = std::get_if<term::LogQuadratic>(&t)) {
      pieces.push_back(scaled(lq->coefficient, "ln(" + Polynomial{lq->q, lq->p, Rational(1)}.to_compact_string() + ")"));
    } else if (const auto* at = std::get_if<term::Arctan>(&t)) {
      pieces.push_back(render_arctan(*at));
    }
  }
  pieces.push_back({false, "K"});
  return join(pieces);
}

long double SymbolicAntiderivative::evaluate(long double x) const {
  long double s = 0.0L;
  for (const auto& t : terms) {
    if (const auto* poly = std::get_if<term::PolyTerm>(&t)) {
      s += poly->poly.evaluate(x);
    } else if (const auto* lg = std::get_if<term::LogAbs>(&t)) {
      s += lg->coefficient.to_long_double() * std::log(std::fabs(x - lg->root.to_long_double()));
    } else if (const auto* pw = std::get_if<term::PowerTerm>(&t)) {
      s += pw->coefficient.to_long_double() / std::pow(x - pw->root.to_long_double(), pw->exponent);
    } else if (const auto* lq = std::get_if<term::LogQuadratic>(&t)) {
      s += lq->coefficient.to_long_double() *
           std::log(x * x + lq->p.to_long_double() * x + lq->q.to_long_double());
    } else if (const auto* at = std::get_if<term::Arctan>(&t)) {
      const long double sc = std::sqrt(at->scale_squared.to_long_double());
      s += at->coefficient.to_long_double() / sc * std::atan((x + at->shift.to_long_double()) / sc);
    }
  }
  return s;
}

std::string_view to_string(ConicShape shape) {
  switch (shape) {
    case ConicShape::Circle: return "circle";
    case ConicShape::Ellipse: return "ellipse";
    case ConicShape::Hyperbola: return "hyperbola";
    case ConicShape::Parabola: return "parabola";
  }
  return "unknown";
}

ConicShape parse_conic_shape(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (ConicShape s : {ConicShape::Circle, ConicShape::Ellipse, ConicShape::Hyperbola, ConicShape::Parabola}) {
    if (lower == to_string(s)) return s;
  }
  throw ParseError("unknown conic kind '" + std::string(name) + "' (circle, ellipse, hyperbola, parabola)");
}

void ConicParam::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
    throw DomainError("conic parameters a and b must be positive and finite");
  }
  if (shape == ConicShape::Circle && a != b) throw DomainError("a circle needs a == b");
}

double ConicParam::implicit_residual(double x, double y) const {
  switch (shape) {
    case ConicShape::Circle:
    case ConicShape::Ellipse: return x * x / (a * a) + y * y / (b * b) - 1.0;
    case ConicShape::Hyperbola: {
      const double u = x * x / (a * a);
      const double v = y * y / (b * b);
      return (u - v - 1.0) / std::max(1.0, u + v);
    }
    case ConicShape::Parabola: return (y * y - 4.0 * a * x) / std::max(1.0, y * y + 4.0 * a * std::fabs(x));
  }
  return 0.0;
}

Point2 parametrize_conic(const ConicParam& c, double t) {
  c.validate();
  if (!std::isfinite(t)) throw DomainError("parameter t must be finite");
  const double t2 = t * t;
  switch (c.shape) {
    case ConicShape::Circle:
    case ConicShape::Ellipse: return {c.a * (1.0 - t2) / (1.0 + t2), 2.0 * c.b * t / (1.0 + t2)};
    case ConicShape::Hyperbola:
      if (t == 1.0 || t == -1.0) throw DomainError("t = " + std::string(t > 0 ? "1" : "-1") +
                                                   " is a pole of the hyperbola parametrization");
      return {c.a * (1.0 + t2) / (1.0 - t2), 2.0 * c.b * t / (1.0 - t2)};
    case ConicShape::Parabola: return {c.a * t2, 2.0 * c.a * t};
  }
  return {};
}

double ellipse_area(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("semi-axes must be positive and finite");
  }
  return std::numbers::pi * a * b;
}

namespace {

double simpson_step(const auto& f, double lo, double hi, double flo, double fmid, double fhi, double whole,
                    double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid);
  const double rm = 0.5 * (mid + hi);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
         simpson_step(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

}  // namespace

double complete_elliptic_e(double m, EllipticMethod method, double tolerance) {
  if (!(m >= 0.0 && m <= 1.0)) throw DomainError("elliptic parameter m must lie in [0, 1]");
  if (method == EllipticMethod::Simpson) {
    if (!(tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
    const auto f = [m](double t) {
      const double s = std::sin(t);
      return std::sqrt(1.0 - m * s * s);
    };
    const double lo = 0.0;
    const double hi = std::numbers::pi / 2.0;
    const double flo = f(lo), fmid = f(0.5 * hi), fhi = f(hi);
    const double whole = hi / 6.0 * (flo + 4.0 * fmid + fhi);
    return simpson_step(f, lo, hi, flo, fmid, fhi, whole, tolerance, 40);
  }
  if (m == 1.0) return 1.0;
  // E = K (1 - sum 2^(n-1) c_n^2), K = pi / (2 AGM(1, sqrt(1 - m))).
  long double a = 1.0L;
  long double g = std::sqrt(1.0L - static_cast<long double>(m));
  long double sum = 0.5L * m;
  long double weight = 0.5L;
  for (int i = 0; i < 64 && std::fabs(a - g) > 1e-19L * a; ++i) {
    const long double c = 0.5L * (a - g);
    const long double an = 0.5L * (a + g);
    g = std::sqrt(a * g);
    a = an;
    weight *= 2.0L;
    sum += weight * c * c;
  }
  const long double k = std::numbers::pi_v<long double> / (2.0L * a);
  return static_cast<double>(k * (1.0L - sum));
}

double ellipse_perimeter(double a, double b, EllipticMethod method, double tolerance) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0)) throw DomainError("semi-axes must be positive and finite");
  if (a < b) throw DomainError("perimeter needs a >= b (swap the semi-axes)");
  const double m = std::clamp((a - b) * (a + b) / (a * a), 0.0, 1.0);
  return 4.0 * a * complete_elliptic_e(m, method, tolerance / (4.0 * a));
}

}  // namespace klasika
