#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klasika/integer.hpp"
#include "klasika/polynomial.hpp"

namespace klasika {

struct ConstructibleValue;

/// Immutable expression over Q built from + - * / and square roots.
class ConstructibleExpr {
 public:
  enum class Kind { Leaf, Add, Sub, Mul, Div, Neg, Sqrt };

  /// The rational leaf 0.
  ConstructibleExpr();
  explicit ConstructibleExpr(const Rational& value);
  ConstructibleExpr(long long value) : ConstructibleExpr(Rational(value)) {}  // NOLINT

  /// Infix syntax: numbers (integers or decimals), + - * /, unary minus,
  /// parentheses and sqrt(...). Throws ParseError naming the offending token.
  static ConstructibleExpr parse(std::string_view text);

  static ConstructibleExpr sqrt(const ConstructibleExpr& operand);

  Kind kind() const;
  /// Leaf value; DomainError for other kinds.
  const Rational& leaf_value() const;
  /// Operands: one for Neg and Sqrt, two for binary nodes, none for leaves.
  std::vector<ConstructibleExpr> operands() const;

  /// Fully determined text form, reparsable by parse().
  std::string to_string() const;

  friend ConstructibleExpr operator+(const ConstructibleExpr& a, const ConstructibleExpr& b);
  friend ConstructibleExpr operator-(const ConstructibleExpr& a, const ConstructibleExpr& b);
  friend ConstructibleExpr operator*(const ConstructibleExpr& a, const ConstructibleExpr& b);
  friend ConstructibleExpr operator/(const ConstructibleExpr& a, const ConstructibleExpr& b);
  ConstructibleExpr operator-() const;

  struct Node;

 private:
  friend ConstructibleValue eval_constructible(const ConstructibleExpr& e);

  explicit ConstructibleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ConstructibleValue {
  double value = 0.0;
  /// Set when the expression simplifies to a rational (no irrational root on
  /// the way); the value is then exact.
  std::optional<Rational> exact;
  /// Number of distinct irrational square roots in the expression.
  int sqrt_count = 0;
  /// 2^sqrt_count: each distinct root adjoins at most a quadratic extension,
  /// so this bounds [Q(value) : Q].
  Integer degree_bound;
};

/// Evaluates e. Rational subexpressions are exact, so sqrt of a negative
/// rational and division by an exact zero are always caught; irrational
/// operands are checked in long double with a 1e-12 relative margin.
/// DomainError on a negative square root or division by zero.
ConstructibleValue eval_constructible(const ConstructibleExpr& e);

enum class Verdict { No, Yes, Unknown };

std::string_view to_string(Verdict v);

struct ConstructibilityVerdict {
  Verdict constructible = Verdict::Unknown;
  std::string reason;
  /// Degree of the relevant minimal polynomial, when it is known.
  std::optional<int> degree;
  /// An irreducible polynomial (no rational root) certifying a No.
  std::optional<Polynomial> witness_polynomial;
  /// For n-gons: an odd prime that is not Fermat, or a Fermat prime that
  /// divides n more than once.
  std::optional<std::uint64_t> witness_prime;
  /// Prime factorization of n, for n-gons.
  std::vector<PrimePowerU64> factorization;
  /// Factors whose product is the tested polynomial, for a Yes.
  std::vector<Polynomial> factors;
  /// A constructible expression for a root, when one is exhibited.
  std::optional<ConstructibleExpr> witness_expression;
};

/// p = 2^(2^r) + 1 and p prime (trial division).
bool is_fermat_prime(std::uint64_t p);

/// Regular n-gon: constructible iff n = 2^k p_1 ... p_s with distinct Fermat
/// primes p_i. DomainError for n < 3.
ConstructibilityVerdict ngon_constructible(std::uint64_t n);

/// Whether the angle with the given cos 3a can be trisected: tests
/// 4x^3 - 3x - cos3a for a rational root. DomainError if |cos3a| > 1.
ConstructibilityVerdict trisectable(const Rational& cos3a);

/// Whether the edge of a cube of volume `volume_factor` (relative to the unit
/// cube) is constructible; the classical problem is volume_factor = 2.
/// DomainError unless volume_factor > 0.
ConstructibilityVerdict cube_doubling(const Rational& volume_factor = Rational(2));

/// Squaring the circle: constant No, resting on the transcendence of pi.
ConstructibilityVerdict square_circle();

/// Necessary-condition test for a root of f. With the flag set, the target
/// is asserted to be a real root of f. Rational roots are peeled first; a
/// residual of degree <= 2 gives Yes with a witness expression, an
/// irreducible cubic f gives No, anything else is Unknown with a reason.
/// DomainError on a constant f.
ConstructibilityVerdict degree_power_of_two_check(const Polynomial& f, bool witness_root_is_target);

}  // namespace klasika
