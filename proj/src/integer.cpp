#include "klasika/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "klasika/error.hpp"

namespace klasika {

namespace {

constexpr unsigned long kTrialLimit = 10000;
constexpr long kRhoIterations = 200000;

// Pollard-Brent rho on composite n; returns a nontrivial factor or 0 when the
// budget runs out.
Integer brent_factor(const Integer& n) {
  if (n % 2 == 0) return Integer(2);
  for (unsigned long c = 1; c < 16; ++c) {
    Integer y = 2;
    Integer x;
    Integer ys;
    Integer q = 1;
    Integer g = 1;
    long r = 1;
    long spent = 0;
    const long m = 128;
    auto step = [&](Integer& v) {
      v = (v * v + c) % n;
    };
    while (g == 1 && spent < kRhoIterations) {
      x = y;
      for (long i = 0; i < r; ++i) step(y);
      long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const long batch = std::min(m, r - k);
        for (long i = 0; i < batch; ++i) {
          step(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        k += batch;
        spent += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // Batched gcd overshot; walk back one step at a time.
      do {
        step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return Integer(0);
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const Integer d = brent_factor(n);
  if (d == 0) {
    throw UnsupportedError("integer too large to factor: " + n.get_str());
  }
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1u;
  }
  return result;
}

std::uint64_t rho_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2;
    std::uint64_t y = 2;
    std::uint64_t d = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = rho_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer rest = abs(n);
  std::map<Integer, int> found;
  for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      ++found[Integer(p)];
      rest /= p;
    }
  }
  factor_into(rest, found);
  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

std::vector<Integer> positive_divisors(const Integer& n, std::size_t limit) {
  const auto factors = factor_integer(n);
  std::size_t count = 1;
  for (const auto& f : factors) {
    count *= static_cast<std::size_t>(f.exponent + 1);
    if (count > limit) throw UnsupportedError("too many divisors of " + n.get_str());
  }
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& f : factors) {
    const std::size_t base = divisors.size();
    Integer power = 1;
    for (int e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePowerU64> factor_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<std::uint64_t, int> found;
  for (std::uint64_t p = 2; p < 100 && n > 1; ++p) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  factor_u64_into(n, found);
  std::vector<PrimePowerU64> result;
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

}  // namespace klasika
