#include "klasika/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "klasika/error.hpp"
#include "klasika/integer.hpp"

namespace klasika {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw DomainError("negative monomial exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial result = constant(1);
  for (const auto& r : roots) result *= linear_root(r);
  return result;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (token.empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
    coeffs.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

long double Polynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

Complex Polynomial::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

namespace {

// Appends one signed term; `first` controls whether a leading '+' is dropped.
void append_term(std::string& out, const Rational& c, int power, char var, bool compact, bool& first) {
  const bool negative = c.sign() < 0;
  const Rational mag = abs(c);
  if (compact) {
    if (negative) out += '-';
    else if (!first) out += '+';
  } else {
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
  }
  first = false;
  const bool unit = mag == Rational(1);
  if (power == 0) {
    out += mag.to_string();
    return;
  }
  if (!unit) {
    if (compact) {
      out += mag.to_string() + "*";
    } else if (mag.is_integer()) {
      out += mag.to_string();
    } else {
      out += "(" + mag.to_string() + ")";
    }
  }
  out += var;
  if (power > 1) out += "^" + std::to_string(power);
}

}  // namespace

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
      append_term(out, coeffs_[static_cast<std::size_t>(i)], i, var, false, first);
    }
  }
  return out;
}

std::string Polynomial::to_compact_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
      append_term(out, coeffs_[static_cast<std::size_t>(i)], i, var, true, first);
    }
  }
  return out;
}

std::string Polynomial::to_coeff_list() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial poly_scale(const Polynomial& f, const Rational& c) { return f * c; }

Polynomial poly_pow(const Polynomial& f, int k) {
  if (k < 0) throw DomainError("negative polynomial power");
  Polynomial result = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) result *= f;
  return result;
}

Polynomial poly_derivative(const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = f.coeff(i) * Rational(i);
  return Polynomial(std::move(out));
}

Polynomial poly_integral(const Polynomial& f) {
  if (f.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(f.degree()) + 2);
  for (int i = 0; i <= f.degree(); ++i) out[static_cast<std::size_t>(i + 1)] = f.coeff(i) / Rational(i + 1);
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.degree() < g.degree()) return {Polynomial(), f};
  std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
  const Rational lead = g.leading();
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + g.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * g.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(g.degree()));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading());
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    // Keep the remainder sequence monic to slow coefficient growth.
    b = monic(r);
  }
  return monic(a);
}

Polynomial poly_shift(const Polynomial& f, const Rational& c) {
  // Horner in the ring: f(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  const Polynomial xc({c, Rational(1)});
  Polynomial acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * xc + Polynomial::constant(f.coeff(i));
  return acc;
}

Polynomial poly_reflect(const Polynomial& f) {
  std::vector<Rational> out(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Polynomial(std::move(out));
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& c : f.coefficients()) den_lcm = lcm(den_lcm, c.denominator());
  Integer num_gcd = 0;
  for (const auto& c : f.coefficients()) {
    num_gcd = gcd(num_gcd, Integer(c.numerator() * (den_lcm / c.denominator())));
  }
  Rational scale(den_lcm, num_gcd);
  if (f.leading().sign() < 0) scale = -scale;
  return f * scale;
}

std::vector<RationalRoot> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  Polynomial g = primitive_part(f);

  int zero_mult = 0;
  while (g.degree() > 0 && g.coeff(0).is_zero()) {
    g = poly_divmod(g, Polynomial::monomial(1, 1)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});
  if (g.degree() < 1) return roots;

  // Divisors of the original end coefficients stay valid for every deflated
  // factor, since those coefficients divide the originals.
  const auto numerators = positive_divisors(g.coeff(0).numerator());
  const auto denominators = positive_divisors(g.leading().numerator());
  if (static_cast<double>(numerators.size()) * static_cast<double>(denominators.size()) > 4e6) {
    throw UnsupportedError("too many rational root candidates (" + std::to_string(numerators.size()) + " x " +
                           std::to_string(denominators.size()) + ")");
  }

  for (const Integer& q : denominators) {
    for (const Integer& p : numerators) {
      if (gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        if (g.degree() < 1) break;
        const Integer at_one = g(Rational(1)).numerator();
        const Integer at_minus_one = g(Rational(-1)).numerator();
        const Integer signed_p = s * p;
        // For an integer polynomial with root p/q: (q - p) | g(1), (q + p) | g(-1).
        const Integer qm = q - signed_p;
        const Integer qp = q + signed_p;
        if (qm != 0 && at_one % qm != 0) continue;
        if (qp != 0 && at_minus_one % qp != 0) continue;
        const Rational candidate(signed_p, q);
        int mult = 0;
        const Polynomial factor{Rational(Integer(-signed_p)), Rational(q)};
        while (g.degree() >= 1 && g(candidate).is_zero()) {
          g = poly_divmod(g, factor).first;
          ++mult;
        }
        if (mult > 0) {
          roots.push_back({candidate, mult});
          g = primitive_part(g);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace klasika
