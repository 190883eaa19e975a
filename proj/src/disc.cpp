#include "klasika/disc.hpp"

#include <stdexcept>

#include "klasika/error.hpp"

namespace klasika {

namespace {

int pair_sign(int n) { return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1; }

void require_degree_two(const Polynomial& f, const char* what) {
  if (f.degree() < 2) {
    throw DomainError(std::string(what) + " needs degree >= 2, got " + std::to_string(f.degree()));
  }
}

}  // namespace

Rational determinant(const RationalMatrix& m) { return bareiss_determinant(m); }

PowerSums power_sums(const Polynomial& f, int m) {
  if (f.is_zero()) throw DomainError("power sums of the zero polynomial");
  if (m < 0) throw DomainError("power sums need m >= 0");
  const Polynomial g = monic(f);
  const int n = g.degree();
  // sigma[nu] = (-1)^nu a_{n-nu}, sigma[0] = 1
  std::vector<Rational> sigma(static_cast<std::size_t>(n) + 1);
  for (int nu = 0; nu <= n; ++nu) {
    const Rational a = g.coeff(n - nu);
    sigma[static_cast<std::size_t>(nu)] = (nu % 2 == 0) ? a : -a;
  }
  PowerSums out;
  out.values.resize(static_cast<std::size_t>(m) + 1);
  out.values[0] = Rational(n);
  for (int mu = 1; mu <= m; ++mu) {
    // S_mu = sum_{i=1}^{min(mu-1,n)} (-1)^{i-1} sigma_i S_{mu-i}
    //        + [mu <= n] (-1)^{mu-1} mu sigma_mu
    Rational s;
    const int upper = mu <= n ? mu - 1 : n;
    for (int i = 1; i <= upper; ++i) {
      const Rational term = sigma[static_cast<std::size_t>(i)] * out.values[static_cast<std::size_t>(mu - i)];
      s += (i % 2 == 1) ? term : -term;
    }
    if (mu <= n) {
      const Rational term = Rational(mu) * sigma[static_cast<std::size_t>(mu)];
      s += (mu % 2 == 1) ? term : -term;
    }
    out.values[static_cast<std::size_t>(mu)] = s;
  }
  return out;
}

RationalMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) throw DomainError("Sylvester matrix of a zero polynomial");
  const auto size = static_cast<std::size_t>(m + n);
  RationalMatrix s(size, size);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = f.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) {
      s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + i)) = g.coeff(n - i);
    }
  }
  return s;
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.degree() + g.degree() == 0) return Rational(1);
  return determinant(sylvester_matrix(f, g));
}

Rational discriminant_resultant(const Polynomial& f) {
  require_degree_two(f, "discriminant");
  const int n = f.degree();
  const Rational res = resultant(f, poly_derivative(f));
  const Rational d = res / f.leading();
  return pair_sign(n) > 0 ? d : -d;
}

RationalMatrix hankel_power_sum_matrix(const Polynomial& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("Hankel matrix needs degree >= 1");
  const PowerSums s = power_sums(f, 2 * n - 2);
  const auto size = static_cast<std::size_t>(n);
  RationalMatrix h(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) h(i, j) = s[i + j];
  }
  return h;
}

Rational hankel_determinant(const Polynomial& f) { return determinant(hankel_power_sum_matrix(f)); }

Rational ordered_pair_product(const Rational& hankel_det, int degree) {
  return pair_sign(degree) > 0 ? hankel_det : -hankel_det;
}

Rational discriminant_from_ordered_pair_product(const Rational& product, const Rational& leading, int degree) {
  const Rational scaled = pow(leading, 2 * degree - 2) * product;
  return pair_sign(degree) > 0 ? scaled : -scaled;
}

Rational discriminant_hankel(const Polynomial& f) {
  require_degree_two(f, "discriminant");
  const int n = f.degree();
  const Rational product = ordered_pair_product(hankel_determinant(f), n);
  return discriminant_from_ordered_pair_product(product, f.leading(), n);
}

bool has_repeated_roots(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("repeated roots of the zero polynomial");
  if (f.degree() < 2) return false;
  const bool by_discriminant = discriminant_resultant(f).is_zero();
  const bool by_gcd = poly_gcd(f, poly_derivative(f)).degree() >= 1;
  if (by_discriminant != by_gcd) {
    throw std::logic_error("discriminant and gcd disagree on repeated roots of " + f.to_string());
  }
  return by_discriminant;
}

}  // namespace klasika
