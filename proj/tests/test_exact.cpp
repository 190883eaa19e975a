#include <sstream>

#include "doctest.h"
#include "klasika/error.hpp"
#include "klasika/integer.hpp"
#include "klasika/matrix.hpp"
#include "klasika/polynomial.hpp"
#include "test_support.hpp"

using namespace klasika;

namespace {

Polynomial P(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

// (x - 2)^4 (x - 3)^5, expanded independently.
const Polynomial kPlanted = P({-3888, 14256, -23112, 21744, -13083, 5221, -1382, 234, -23, 1});

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
  CHECK(Rational(-7, 3) < Rational(-2));
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);

  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-4), root));
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(4).to_string() == "4");
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "--1", "1/-2", " 1"}) {
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  const Rational big = pow(Rational(10), 400) + Rational(1, 3);
  CHECK(static_cast<double>(big.to_long_double() / 1e400L) == doctest::Approx(1.0));
}

TEST_CASE("random fractions come back reduced") {
  for (int i = 0; i < 500; ++i) {
    const long long p = support::uniform(-100000, 100000);
    const long long q = support::uniform(1, 100000);
    const Rational r(p, q);
    Integer g;
    const Integer num = abs(r.numerator());
    const Integer den = r.denominator();
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    CHECK(r.denominator() > 0);
    CHECK((r.is_zero() ? r.denominator() == 1 : g == 1));
    CHECK(r * Rational(q) == Rational(p));
  }
}

TEST_CASE("polynomial construction, parsing and printing") {
  const Polynomial f = Polynomial::parse("-1,-6,0,8");
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "8x^3 - 6x - 1");
  CHECK(f.to_coeff_list() == "-1,-6,0,8");
  CHECK(Polynomial::parse("1,2,0,0").degree() == 1);
  CHECK(Polynomial::parse("0").is_zero());
  CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial::parse("1/2,-3/4").coeff(1) == Rational(-3, 4));
  CHECK(P({5, 2, 1}).to_compact_string() == "x^2+2*x+5");
  CHECK(P({0, -1}).to_compact_string() == "-x");
  for (const char* bad : {"", ",", "1,,2", "1,x", "1;2", "1, 2"}) {
    CHECK_THROWS_AS(Polynomial::parse(bad), ParseError);
  }
}

TEST_CASE("ring operations") {
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  const Polynomial f = P({3, 0, 2});
  CHECK(f + Polynomial() == f);
  CHECK(f - f == Polynomial());
  CHECK(poly_scale(f, Rational(1, 2)) == Polynomial{Rational(3, 2), Rational(0), Rational(1)});

  Polynomial expanded = Polynomial::constant(1);
  for (int i = 0; i < 4; ++i) expanded = poly_mul(expanded, P({-2, 1}));
  for (int i = 0; i < 5; ++i) expanded = poly_mul(expanded, P({-3, 1}));
  CHECK(expanded == kPlanted);
  CHECK(poly_pow(P({-2, 1}), 4) * poly_pow(P({-3, 1}), 5) == kPlanted);
}

TEST_CASE("ring axioms on random triples") {
  for (int i = 0; i < 500; ++i) {
    const Polynomial f = support::polynomial(static_cast<int>(support::uniform(0, 6)), 20, 5);
    const Polynomial g = support::polynomial(static_cast<int>(support::uniform(0, 6)), 20, 5);
    const Polynomial h = support::polynomial(static_cast<int>(support::uniform(0, 6)), 20, 5);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("evaluation") {
  const Polynomial f = P({-1, -6, 0, 8});
  CHECK(f(Rational(1, 2)) == Rational(-3));
  CHECK(f.evaluate(0.5) == doctest::Approx(-3.0));
  CHECK(static_cast<double>(f.evaluate(0.5L)) == doctest::Approx(-3.0));
  const Complex z = P({1, 0, 1}).evaluate(Complex(0.0, 1.0));
  CHECK(std::abs(z) < 1e-15);
}

TEST_CASE("derivative and integral") {
  CHECK(poly_derivative(P({0, 4, 0, 1})) == P({4, 0, 3}));
  CHECK(poly_derivative(P({7})).is_zero());
  const Polynomial f = support::polynomial(5, 9, 4);
  CHECK(poly_derivative(poly_integral(f)) == f);
  CHECK(poly_derivative(f).degree() == f.degree() - 1);
}

TEST_CASE("division and gcd") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(P({4, 2}), Polynomial()) == P({2, 1}));
  CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), DomainError);
  CHECK_THROWS_AS(poly_divmod(P({1}), Polynomial()), DomainError);

  // (x-2)^3 (x-3)^4, expanded independently.
  const Polynomial expected = P({-648, 1836, -2214, 1473, -584, 138, -18, 1});
  CHECK(poly_gcd(kPlanted, poly_derivative(kPlanted)) == expected);

  for (int i = 0; i < 300; ++i) {
    const Polynomial f = support::polynomial(static_cast<int>(support::uniform(0, 7)), 15, 3);
    const Polynomial g = support::polynomial(static_cast<int>(support::uniform(0, 5)), 15, 3);
    const auto [q, r] = poly_divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    const Polynomial common = support::polynomial(static_cast<int>(support::uniform(1, 3)), 5);
    const Polynomial d = poly_gcd(f * common, g * common);
    CHECK(d.leading() == Rational(1));
    CHECK(poly_divmod(f * common, d).second.is_zero());
    CHECK(poly_divmod(g * common, d).second.is_zero());
    CHECK(poly_divmod(d, monic(common)).second.is_zero());
  }
}

TEST_CASE("shift, reflect, monic and primitive part") {
  const Polynomial f = P({1, 2, 3});
  CHECK(poly_shift(f, Rational(1)) == P({6, 8, 3}));
  CHECK(poly_reflect(P({1, 2, 3, 4})) == P({1, -2, 3, -4}));
  CHECK(monic(P({2, 4})) == Polynomial{Rational(1, 2), Rational(1)});
  CHECK(primitive_part(Polynomial{Rational(-1, 2), Rational(0), Rational(-3), Rational(4)}) == P({-1, 0, -6, 8}));
  CHECK(primitive_part(P({2, -4})) == P({-1, 2}));
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(P({-1, -6, 0, 8})).empty());
  CHECK(rational_roots(P({-1, 0, -6, 8})).empty());
  CHECK(rational_roots(P({-2, 0, 0, 1})).empty());
  const auto r = rational_roots(P({-4, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == RationalRoot{Rational(-2), 1});
  CHECK(r[1] == RationalRoot{Rational(2), 1});
  const auto planted = rational_roots(kPlanted);
  REQUIRE(planted.size() == 2);
  CHECK(planted[0] == RationalRoot{Rational(2), 4});
  CHECK(planted[1] == RationalRoot{Rational(3), 5});
  CHECK(rational_roots(P({0, 0, 1}))[0] == RationalRoot{Rational(0), 2});
  CHECK_THROWS_AS(rational_roots(Polynomial()), DomainError);
  CHECK(rational_roots(P({5})).empty());

  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> roots;
    const int k = static_cast<int>(support::uniform(1, 4));
    for (int j = 0; j < k; ++j) roots.push_back(support::rational(12, 6));
    Polynomial f = Polynomial::from_roots(roots) * P({1, 0, 1}) * support::nonzero_rational(9, 4);
    const auto found = rational_roots(f);
    int total = 0;
    for (const auto& rr : found) {
      CHECK(f(rr.value).is_zero());
      total += rr.multiplicity;
    }
    CHECK(total == k);
  }
}

TEST_CASE("integer factorization") {
  const auto f = factor_integer(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == PrimePower{Integer(2), 3});
  CHECK(f[2] == PrimePower{Integer(5), 1});
  const auto fermat5 = factor_u64(4294967297ULL);
  REQUIRE(fermat5.size() == 2);
  CHECK(fermat5[0].prime == 641);
  CHECK(fermat5[1].prime == 6700417);
  CHECK(positive_divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::uint64_t>(support::uniform(2, 1LL << 40));
    std::uint64_t prod = 1;
    for (const auto& pp : factor_u64(n)) {
      CHECK(is_prime_u64(pp.prime));
      for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("matrices") {
  RationalMatrix v(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) v(i, j) = pow(Rational(static_cast<long long>(i) + 1), static_cast<int>(j));
  }
  CHECK(bareiss_determinant(v) == Rational(12));
  CHECK(bareiss_determinant(RationalMatrix::identity(5)) == Rational(1));
  const RationalMatrix a{{2, 1}, {1, 3}};
  const auto x = solve_linear(a, {Rational(3), Rational(5)});
  CHECK(x == std::vector<Rational>{Rational(4, 5), Rational(7, 5)});
  CHECK_THROWS_AS(solve_linear(RationalMatrix{{1, 2}, {2, 4}}, {Rational(1), Rational(2)}), DomainError);
  const auto ns = null_space(RationalMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(ns.size() == 2);
  CHECK(rank(RationalMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK_THROWS_AS((RationalMatrix{{1, 2}, {3}}), DomainError);
  CHECK((a * RationalMatrix::identity(2)) == a);
  CHECK(a.transpose() == a);
  CHECK(a.is_symmetric());
}
