#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "klasika/error.hpp"
#include "klasika/roots.hpp"
#include "test_support.hpp"

using namespace klasika;

namespace {

Polynomial P(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

bool contains(const std::vector<Complex>& zs, Complex target, double tol) {
  return std::any_of(zs.begin(), zs.end(), [&](Complex z) { return std::abs(z - target) < tol; });
}

double l1(const Polynomial& f) {
  double s = 0.0;
  for (const auto& c : f.coefficients()) s += std::abs(c.to_double());
  return s;
}

const Complex kEps(-0.5, std::sqrt(3.0) / 2.0);

}  // namespace

TEST_CASE("depress") {
  const DepressedPolynomial a = depress(P({1, 3, 3, 1}));
  CHECK(a.poly == P({0, 0, 0, 1}));
  CHECK(a.shift == Rational(1));

  const DepressedPolynomial b = depress(P({-6, 11, -6, 1}));
  CHECK(b.poly == P({0, -1, 0, 1}));
  CHECK(b.shift == Rational(-2));

  const Rational bb(5, 3), cc(-2, 7);
  const DepressedPolynomial q = depress(Polynomial{cc, bb, Rational(1)});
  CHECK(q.poly == Polynomial{cc - bb * bb / Rational(4), Rational(0), Rational(1)});
  CHECK(q.shift == bb / Rational(2));

  CHECK_THROWS_AS(depress(P({1, 1})), DomainError);
  CHECK_THROWS_AS(depress(P({1})), DomainError);
}

TEST_CASE("depression round trip on random cubics and quartics") {
  for (int i = 0; i < 500; ++i) {
    const Polynomial f = support::polynomial(3 + i % 2, 20, 6);
    const DepressedPolynomial d = depress(f);
    CHECK(d.poly.leading() == Rational(1));
    CHECK(d.poly.coeff(d.poly.degree() - 1).is_zero());
    CHECK(poly_shift(d.poly, d.shift) == monic(f));
    const Rational x = support::rational(50, 7);
    CHECK(d.poly(x + d.shift) == monic(f)(x));
  }
}

TEST_CASE("quadratic solver") {
  auto [a1, a2] = solve_quadratic(P({-4, 0, 1}));
  CHECK(std::abs(a1 - Complex(2.0)) < 1e-15);
  CHECK(std::abs(a2 - Complex(-2.0)) < 1e-15);
  auto [b1, b2] = solve_quadratic(P({1, 0, 1}));
  CHECK(std::abs(b1 - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(b2 - Complex(0.0, -1.0)) < 1e-15);
  auto [c1, c2] = solve_quadratic(P({2, -3, 1}));
  CHECK(std::abs(c1 - Complex(2.0)) < 1e-15);
  CHECK(std::abs(c2 - Complex(1.0)) < 1e-15);
  CHECK_THROWS_AS(solve_quadratic(P({1, 2, 3, 4})), DomainError);

  for (int i = 0; i < 500; ++i) {
    const Polynomial f = support::polynomial(2, 1000, 9);
    auto [r1, r2] = solve_quadratic(f);
    const double tol = 1e-10 * (1.0 + l1(f));
    CHECK(std::abs(f.evaluate(r1)) < tol);
    CHECK(std::abs(f.evaluate(r2)) < tol);
  }
}

TEST_CASE("Cardano on fixed cubics") {
  const CubicRoots unity = solve_cubic_cardano(P({-1, 0, 0, 1}));
  const std::vector<Complex> u(unity.roots.begin(), unity.roots.end());
  CHECK(contains(u, Complex(1.0), 1e-12));
  CHECK(contains(u, kEps, 1e-12));
  CHECK(contains(u, std::conj(kEps), 1e-12));
  CHECK(std::abs(unity.roots[0] - Complex(1.0)) < 1e-12);

  const CubicRoots eight = solve_cubic_cardano(P({-8, 0, 0, 1}));
  const std::vector<Complex> e(eight.roots.begin(), eight.roots.end());
  CHECK(contains(e, Complex(2.0), 1e-12));
  CHECK(contains(e, 2.0 * kEps, 1e-12));
  CHECK(contains(e, 2.0 * std::conj(kEps), 1e-12));

  const CubicRoots three = solve_cubic_cardano(P({-6, 11, -6, 1}));
  std::vector<double> re;
  for (const Complex& z : three.roots) {
    CHECK(z.imag() == 0.0);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(re[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(re[2] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(three.discriminant_sign == 1);

  // Triple and double roots.
  const CubicRoots triple = solve_cubic_cardano(P({1, 3, 3, 1}));
  for (const Complex& z : triple.roots) CHECK(std::abs(z - Complex(-1.0)) < 1e-12);
  const CubicRoots dbl = solve_cubic_cardano(P({-4, 0, 3, 1}));  // (x-1)(x+2)^2
  for (const Complex& z : dbl.roots) CHECK(z.imag() == 0.0);
  CHECK_THROWS_AS(solve_cubic_cardano(P({1, 0, 1})), DomainError);
}

TEST_CASE("Cardano structure: u v = -a/3 and epsilon rotation") {
  for (int i = 0; i < 300; ++i) {
    const Polynomial f = support::polynomial(3, 20, 4);
    const CubicRoots c = solve_cubic_cardano(f);
    const double a = c.depressed.poly.coeff(1).to_double();
    const double scale = 1.0 + std::abs(a);
    CHECK(std::abs(c.u * c.v + a / 3.0) < 1e-9 * scale);
    CHECK(std::abs(c.epsilon - kEps) < 1e-15);
  }
}

TEST_CASE("Cardano residuals and Vieta on 1000 random cubics") {
  for (int i = 0; i < 1000; ++i) {
    const Polynomial f = support::polynomial(3, 20);
    const CubicRoots c = solve_cubic_cardano(f);
    const double tol = 1e-8 * (1.0 + l1(f));
    Complex sum = 0.0, prod = 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(f.evaluate(c.roots[k])) < tol);
      CHECK(c.residuals[k] == doctest::Approx(std::abs(f.evaluate(c.roots[k]))));
      sum += c.roots[k];
      prod *= c.roots[k];
    }
    const double a3 = f.coeff(3).to_double();
    const Complex want_sum(-f.coeff(2).to_double() / a3);
    const Complex want_prod(-f.coeff(0).to_double() / a3);
    CHECK(std::abs(sum - want_sum) < 1e-8 * (1.0 + std::abs(want_sum)));
    CHECK(std::abs(prod - want_prod) < 1e-8 * (1.0 + std::abs(want_prod)));
  }
}

TEST_CASE("roots of unity") {
  const auto one = roots_of_unity(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Complex(1.0, 0.0));
  const auto four = roots_of_unity(4);
  CHECK(four[1] == Complex(0.0, 1.0));
  CHECK(four[2] == Complex(-1.0, 0.0));
  CHECK(four[3] == Complex(0.0, -1.0));
  const auto three = roots_of_unity(3);
  const CubicRoots c = solve_cubic_cardano(P({-1, 0, 0, 1}));
  for (const Complex& z : three) {
    CHECK(std::min({std::abs(z - c.roots[0]), std::abs(z - c.roots[1]), std::abs(z - c.roots[2])}) < 1e-12);
  }
  CHECK_THROWS_AS(roots_of_unity(0), DomainError);
  for (int n = 1; n <= 12; ++n) {
    const auto zs = roots_of_unity(n);
    REQUIRE(zs.size() == static_cast<std::size_t>(n));
    CHECK(zs[0] == Complex(1.0, 0.0));
    for (const Complex& z : zs) CHECK(std::abs(std::pow(z, n) - 1.0) < 1e-12);
    for (const Complex& z : zs) {
      for (const Complex& w : zs) CHECK(contains(zs, z * w, 1e-12));
    }
  }
}

TEST_CASE("residual tolerance scales with the coefficients") {
  CHECK(residual_tolerance(P({-1, 0, 0, 1})) == doctest::Approx(3e-8));
  CHECK(residual_tolerance(P({-1, 0, 0, 1}), 1e-6) == doctest::Approx(3e-6));
}
