#pragma once

#include <cstdint>
#include <random>

#include "klasika/matrix.hpp"
#include "klasika/polynomial.hpp"

namespace support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x6b6c6173696b61ULL);
  return engine;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// p/q with |p| <= range and 1 <= q <= max_den.
inline klasika::Rational rational(long long range, long long max_den = 1) {
  return klasika::Rational(uniform(-range, range), uniform(1, max_den));
}

inline klasika::Rational nonzero_rational(long long range, long long max_den = 1) {
  klasika::Rational r;
  while (r.is_zero()) r = rational(range, max_den);
  return r;
}

/// Exactly the given degree.
inline klasika::Polynomial polynomial(int degree, long long range, long long max_den = 1) {
  std::vector<klasika::Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rational(range, max_den);
  c.back() = nonzero_rational(range, max_den);
  return klasika::Polynomial(std::move(c));
}

inline klasika::Polynomial monic_polynomial(int degree, long long range, long long max_den = 1) {
  std::vector<klasika::Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rational(range, max_den);
  c.back() = klasika::Rational(1);
  return klasika::Polynomial(std::move(c));
}

inline klasika::RationalMatrix symmetric(std::size_t n, long long range, long long max_den = 1) {
  klasika::RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = rational(range, max_den);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

inline klasika::RationalMatrix invertible(std::size_t n, long long range);

}  // namespace support

#include "klasika/disc.hpp"

inline klasika::RationalMatrix support::invertible(std::size_t n, long long range) {
  for (;;) {
    klasika::RationalMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c(i, j) = rational(range, 3);
    }
    if (!klasika::determinant(c).is_zero()) return c;
  }
}
