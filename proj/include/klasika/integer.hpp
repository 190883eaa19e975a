#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "klasika/rational.hpp"

namespace klasika {

struct PrimePower {
  Integer prime;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of |n| (n != 0), primes ascending. Trial division by
/// small primes followed by Pollard-Brent rho. Throws UnsupportedError when
/// a cofactor resists the iteration budget.
std::vector<PrimePower> factor_integer(const Integer& n);

/// All positive divisors of |n|, ascending. Throws UnsupportedError when
/// there would be more than `limit` of them.
std::vector<Integer> positive_divisors(const Integer& n, std::size_t limit = 1u << 20);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

struct PrimePowerU64 {
  std::uint64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePowerU64&, const PrimePowerU64&) = default;
};

/// Complete factorization of n >= 1 (empty for n == 1).
std::vector<PrimePowerU64> factor_u64(std::uint64_t n);

}  // namespace klasika
