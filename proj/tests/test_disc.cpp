#include "doctest.h"
#include "klasika/disc.hpp"
#include "klasika/error.hpp"
#include "test_support.hpp"

using namespace klasika;

namespace {

Polynomial P(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

// a_n^{2n-2} prod_{i<j} (r_i - r_j)^2 over explicit roots.
Rational root_product_discriminant(const std::vector<Rational>& roots, const Rational& lead) {
  Rational prod(1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  }
  return pow(lead, 2 * static_cast<int>(roots.size()) - 2) * prod;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(determinant(RationalMatrix::identity(4)) == Rational(1));
  const Rational a(3, 2), b(5), c(-7, 3);
  CHECK(determinant(RationalMatrix{{a, b / Rational(2)}, {b / Rational(2), c}}) == a * c - b * b / Rational(4));
}

TEST_CASE("power sums") {
  const PowerSums s = power_sums(P({2, -3, 1}), 3);
  CHECK(s[0] == Rational(2));
  CHECK(s[1] == Rational(3));
  CHECK(s[2] == Rational(5));
  CHECK(s[3] == Rational(9));
  CHECK_THROWS_AS(power_sums(Polynomial(), 2), DomainError);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> roots;
    const int n = static_cast<int>(support::uniform(1, 5));
    for (int k = 0; k < n; ++k) roots.push_back(support::rational(9, 4));
    const Polynomial f = Polynomial::from_roots(roots) * support::nonzero_rational(5, 3);
    const PowerSums ps = power_sums(f, 8);
    CHECK(ps[0] == Rational(n));
    CHECK(ps[1] == -monic(f).coeff(n - 1));
    for (int mu = 0; mu <= 8; ++mu) {
      Rational direct;
      for (const auto& r : roots) direct += pow(r, mu);
      CHECK(ps[static_cast<std::size_t>(mu)] == direct);
    }
  }
}

TEST_CASE("resultant discriminant closed forms") {
  for (int i = 0; i < 300; ++i) {
    const Rational a = support::nonzero_rational(30, 7), b = support::rational(30, 7), c = support::rational(30, 7),
                   d = support::rational(30, 7);
    CHECK(discriminant_resultant(Polynomial{c, b, a}) == b * b - Rational(4) * a * c);
    const Rational cubic = b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d -
                           Rational(27) * a * a * d * d + Rational(18) * a * b * c * d;
    CHECK(discriminant_resultant(Polynomial{d, c, b, a}) == cubic);
    CHECK(discriminant_resultant(Polynomial{d, c, Rational(0), Rational(1)}) ==
          Rational(-4) * c * c * c - Rational(27) * d * d);
  }
  CHECK_THROWS_AS(discriminant_resultant(P({1, 1})), DomainError);
  CHECK_THROWS_AS(discriminant_hankel(P({1})), DomainError);
}

TEST_CASE("Hankel examples") {
  CHECK(hankel_power_sum_matrix(P({2, -3, 1})) == RationalMatrix{{2, 3}, {3, 5}});
  CHECK(hankel_determinant(P({2, -3, 1})) == Rational(1));
  CHECK(hankel_power_sum_matrix(P({1, 0, 1})) == RationalMatrix{{2, 0}, {0, -2}});
  CHECK(discriminant_hankel(P({1, 0, 1})) == Rational(-4));
  CHECK(discriminant_resultant(P({1, 0, 1})) == Rational(-4));
}

TEST_CASE("ordered-pair conversion") {
  // Roots 1, 2, 4: squared Vandermonde 1 * 9 * 4 = 36; the ordered product
  // over i != j has three negative pairs, so it is -36.
  const Polynomial f = Polynomial::from_roots(std::vector<Rational>{1, 2, 4});
  CHECK(hankel_determinant(f) == Rational(36));
  CHECK(ordered_pair_product(Rational(36), 3) == Rational(-36));
  CHECK(discriminant_from_ordered_pair_product(Rational(-36), Rational(1), 3) == Rational(36));
  CHECK(discriminant_resultant(f) == Rational(36));
}

TEST_CASE("Hankel and resultant agree on 1000 random monic polynomials") {
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + i % 5;
    const Polynomial f = support::monic_polynomial(n, 12, 4);
    CHECK(discriminant_hankel(f) == discriminant_resultant(f));
  }
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = support::polynomial(2 + i % 5, 12, 4);
    const int n = f.degree();
    const Rational converted =
        discriminant_from_ordered_pair_product(ordered_pair_product(hankel_determinant(f), n), f.leading(), n);
    CHECK(converted == discriminant_resultant(f));
  }
}

TEST_CASE("root-product oracle") {
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> roots;
    const int n = 2 + i % 3;
    for (int k = 0; k < n; ++k) roots.push_back(support::rational(15, 5));
    const Rational lead = support::nonzero_rational(6, 3);
    const Polynomial f = Polynomial::from_roots(roots) * lead;
    CHECK(discriminant_resultant(f) == root_product_discriminant(roots, lead));
  }
}

TEST_CASE("Vandermonde identity") {
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    std::vector<Rational> nodes;
    for (std::size_t k = 0; k < n; ++k) nodes.push_back(support::rational(10, 4));
    RationalMatrix x(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) x(r, c) = pow(nodes[c], static_cast<int>(r));
    }
    const Rational vdm = determinant(x);
    CHECK(vdm * vdm == determinant(x * x.transpose()));
    CHECK(vdm * vdm == hankel_determinant(Polynomial::from_roots(nodes)));
  }
}

TEST_CASE("translation invariance") {
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = support::monic_polynomial(2 + i % 4, 10, 3);
    const Rational c = support::rational(10, 5);
    CHECK(discriminant(poly_shift(f, c)) == discriminant(f));
  }
}

TEST_CASE("repeated roots") {
  const Polynomial planted = poly_pow(P({-2, 1}), 4) * poly_pow(P({-3, 1}), 5);
  CHECK(has_repeated_roots(planted));
  CHECK_FALSE(has_repeated_roots(P({-1, 0, 1})));
  CHECK(has_repeated_roots(P({1, 2, 1})));
  CHECK_FALSE(has_repeated_roots(P({5, 3})));
  CHECK_THROWS_AS(has_repeated_roots(Polynomial()), DomainError);

  for (int i = 0; i < 1000; ++i) {
    Polynomial f = support::polynomial(static_cast<int>(support::uniform(2, 6)), 8, 3);
    if (i % 2 == 0) {
      const Polynomial sq = support::polynomial(static_cast<int>(support::uniform(1, 2)), 6, 2);
      f = support::polynomial(static_cast<int>(support::uniform(0, 2)), 6, 2) * sq * sq;
    }
    if (f.degree() < 2) continue;
    const bool by_disc = discriminant(f).is_zero();
    const bool by_gcd = poly_gcd(f, poly_derivative(f)).degree() >= 1;
    CHECK(by_disc == by_gcd);
    CHECK(has_repeated_roots(f) == by_gcd);
    if (i % 2 == 0) CHECK(by_gcd);
  }
}
