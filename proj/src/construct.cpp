#include "klasika/construct.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <set>

#include "klasika/error.hpp"

namespace klasika {

struct ConstructibleExpr::Node {
  Kind kind = Kind::Leaf;
  Rational value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ConstructibleExpr::Node>;
using Kind = ConstructibleExpr::Kind;

constexpr int kMaxDepth = 200;

// A leaf binds like the syntax it prints as: 7 is atomic, -7 a negation,
// 7/3 and -7/3 a quotient.
int precedence(const ConstructibleExpr::Node& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Leaf:
      if (!n.value.is_integer()) return 2;
      return n.value.sign() < 0 ? 3 : 4;
    default: return 4;
  }
}

void render(const ConstructibleExpr::Node& n, std::string& out);

// Right operands that would start with '-' are parenthesized: a-(-b), not a--b.
void render_child(const ConstructibleExpr::Node& c, int min_prec, bool right, std::string& out) {
  std::string s;
  render(c, s);
  if (precedence(c) < min_prec || (right && s.front() == '-')) s = "(" + s + ")";
  out += s;
}

void render(const ConstructibleExpr::Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::Leaf:
      out += n.value.to_string();
      return;
    case Kind::Sqrt:
      out += "sqrt(";
      render(*n.lhs, out);
      out += ')';
      return;
    case Kind::Neg:
      out += '-';
      render_child(*n.lhs, 4, true, out);
      return;
    case Kind::Add:
    case Kind::Sub:
      render_child(*n.lhs, 1, false, out);
      out += n.kind == Kind::Add ? '+' : '-';
      render_child(*n.rhs, 2, true, out);
      return;
    case Kind::Mul:
    case Kind::Div:
      render_child(*n.lhs, 2, false, out);
      out += n.kind == Kind::Mul ? '*' : '/';
      render_child(*n.rhs, 3, true, out);
      return;
  }
}

NodePtr make(Kind k, Rational v, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<ConstructibleExpr::Node>();
  n->kind = k;
  n->value = std::move(v);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr e = expr(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected token");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::string token;
    if (pos_ < text_.size()) {
      token = std::string(text_.substr(pos_, 12));
    }
    throw ParseError(what + " at position " + std::to_string(pos_) +
                     (token.empty() ? std::string(" (end of input)") : " near '" + token + "'"));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr(int depth) {
    if (depth > kMaxDepth) fail("expression nested too deeply");
    NodePtr lhs = term(depth);
    for (;;) {
      if (accept('+')) {
        lhs = make(Kind::Add, {}, lhs, term(depth));
      } else if (accept('-')) {
        lhs = make(Kind::Sub, {}, lhs, term(depth));
      } else {
        return lhs;
      }
    }
  }

  NodePtr term(int depth) {
    NodePtr lhs = unary(depth);
    for (;;) {
      if (accept('*')) {
        lhs = make(Kind::Mul, {}, lhs, unary(depth));
      } else if (accept('/')) {
        lhs = make(Kind::Div, {}, lhs, unary(depth));
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary(int depth) {
    if (depth > kMaxDepth) fail("expression nested too deeply");
    if (accept('-')) return make(Kind::Neg, {}, unary(depth + 1), nullptr);
    if (accept('+')) return unary(depth + 1);
    return primary(depth);
  }

  NodePtr primary(int depth) {
    skip_space();
    if (accept('(')) {
      NodePtr e = expr(depth + 1);
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt");
      NodePtr e = expr(depth + 1);
      if (!accept(')')) fail("expected ')'");
      return make(Kind::Sqrt, {}, e, nullptr);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return number();
    fail("expected a number, '(' or sqrt");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    std::size_t frac_digits = 0;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t fstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      frac_digits = pos_ - fstart;
      if (frac_digits == 0) fail("expected digits after '.'");
      digits += std::string(text_.substr(fstart, frac_digits));
    }
    if (digits.size() > 200) fail("number too long");
    Integer den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    return make(Kind::Leaf, Rational(parse_integer(digits), den), nullptr, nullptr);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Eval {
  bool exact = true;
  Rational q;
  long double x = 0.0L;
};

long double magnitude_margin(long double a) {
  return 1e-12L * (1.0L + std::fabs(a));
}

struct Evaluator {
  std::set<std::string> irrational_roots;

  Eval run(const ConstructibleExpr::Node& n) {
    switch (n.kind) {
      case Kind::Leaf: return {true, n.value, n.value.to_long_double()};
      case Kind::Neg: {
        Eval a = run(*n.lhs);
        return {a.exact, -a.q, -a.x};
      }
      case Kind::Sqrt: {
        Eval a = run(*n.lhs);
        if (a.exact) {
          if (a.q.sign() < 0) throw DomainError("square root of a negative number " + a.q.to_string());
          Rational root;
          if (rational_sqrt(a.q, root)) return {true, root, root.to_long_double()};
          record(n);
          return {false, {}, std::sqrt(a.x)};
        }
        if (a.x < -magnitude_margin(a.x)) throw DomainError("square root of a negative number");
        record(n);
        return {false, {}, a.x > 0 ? std::sqrt(a.x) : 0.0L};
      }
      default: break;
    }
    const Eval a = run(*n.lhs);
    const Eval b = run(*n.rhs);
    const bool exact = a.exact && b.exact;
    switch (n.kind) {
      case Kind::Add:
        return exact ? Eval{true, a.q + b.q, (a.q + b.q).to_long_double()} : Eval{false, {}, a.x + b.x};
      case Kind::Sub:
        return exact ? Eval{true, a.q - b.q, (a.q - b.q).to_long_double()} : Eval{false, {}, a.x - b.x};
      case Kind::Mul:
        return exact ? Eval{true, a.q * b.q, (a.q * b.q).to_long_double()} : Eval{false, {}, a.x * b.x};
      case Kind::Div:
        if (b.exact && b.q.is_zero()) throw DomainError("division by zero");
        if (exact) return {true, a.q / b.q, (a.q / b.q).to_long_double()};
        if (std::fabs(b.x) <= 1e-12L) throw DomainError("division by zero (divisor vanishes numerically)");
        return {false, {}, a.x / b.x};
      default: break;
    }
    throw std::logic_error("unknown expression node");
  }

  void record(const ConstructibleExpr::Node& n) {
    std::string key;
    render(n, key);
    irrational_roots.insert(std::move(key));
  }
};

}  // namespace

ConstructibleExpr::ConstructibleExpr() : ConstructibleExpr(Rational(0)) {}

ConstructibleExpr::ConstructibleExpr(const Rational& value) : node_(make(Kind::Leaf, value, nullptr, nullptr)) {}

ConstructibleExpr ConstructibleExpr::parse(std::string_view text) {
  if (text.size() > 4096) throw ParseError("expression longer than 4096 characters");
  return ConstructibleExpr(Parser(text).parse_all());
}

ConstructibleExpr ConstructibleExpr::sqrt(const ConstructibleExpr& operand) {
  return ConstructibleExpr(make(Kind::Sqrt, {}, operand.node_, nullptr));
}

ConstructibleExpr::Kind ConstructibleExpr::kind() const { return node_->kind; }

const Rational& ConstructibleExpr::leaf_value() const {
  if (node_->kind != Kind::Leaf) throw DomainError("not a leaf");
  return node_->value;
}

std::vector<ConstructibleExpr> ConstructibleExpr::operands() const {
  std::vector<ConstructibleExpr> out;
  if (node_->lhs) out.push_back(ConstructibleExpr(node_->lhs));
  if (node_->rhs) out.push_back(ConstructibleExpr(node_->rhs));
  return out;
}

std::string ConstructibleExpr::to_string() const {
  std::string out;
  render(*node_, out);
  return out;
}

ConstructibleExpr operator+(const ConstructibleExpr& a, const ConstructibleExpr& b) {
  return ConstructibleExpr(make(Kind::Add, {}, a.node_, b.node_));
}
ConstructibleExpr operator-(const ConstructibleExpr& a, const ConstructibleExpr& b) {
  return ConstructibleExpr(make(Kind::Sub, {}, a.node_, b.node_));
}
ConstructibleExpr operator*(const ConstructibleExpr& a, const ConstructibleExpr& b) {
  return ConstructibleExpr(make(Kind::Mul, {}, a.node_, b.node_));
}
ConstructibleExpr operator/(const ConstructibleExpr& a, const ConstructibleExpr& b) {
  return ConstructibleExpr(make(Kind::Div, {}, a.node_, b.node_));
}
ConstructibleExpr ConstructibleExpr::operator-() const { return ConstructibleExpr(make(Kind::Neg, {}, node_, nullptr)); }

ConstructibleValue eval_constructible(const ConstructibleExpr& e) {
  Evaluator ev;
  const Eval r = ev.run(*e.node_);
  ConstructibleValue out;
  out.value = static_cast<double>(r.x);
  if (r.exact) {
    out.exact = r.q;
    out.value = r.q.to_double();
  }
  out.sqrt_count = static_cast<int>(ev.irrational_roots.size());
  mpz_ui_pow_ui(out.degree_bound.get_mpz_t(), 2, static_cast<unsigned long>(out.sqrt_count));
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::No: return "no";
    case Verdict::Yes: return "yes";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

bool is_fermat_prime(std::uint64_t p) {
  if (p < 3) return false;
  const std::uint64_t m = p - 1;
  if ((m & (m - 1)) != 0) return false;
  const int k = __builtin_ctzll(m);
  if ((k & (k - 1)) != 0) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

ConstructibilityVerdict ngon_constructible(std::uint64_t n) {
  if (n < 3) throw DomainError("n-gon needs n >= 3, got " + std::to_string(n));
  ConstructibilityVerdict v;
  v.factorization = factor_u64(n);
  for (const auto& pp : v.factorization) {
    if (pp.prime == 2) continue;
    if (!is_fermat_prime(pp.prime)) {
      v.constructible = Verdict::No;
      v.witness_prime = pp.prime;
      v.reason = std::to_string(pp.prime) + " divides n and is not a Fermat prime";
      return v;
    }
    if (pp.exponent > 1) {
      v.constructible = Verdict::No;
      v.witness_prime = pp.prime;
      v.reason = "Fermat prime " + std::to_string(pp.prime) + " divides n " + std::to_string(pp.exponent) +
                 " times";
      return v;
    }
  }
  v.constructible = Verdict::Yes;
  v.reason = "n is a power of two times distinct Fermat primes";
  return v;
}

namespace {

// Splits f by its first rational root: {x - r, f / (x - r)}.
std::optional<std::vector<Polynomial>> split_off_rational_root(const Polynomial& f) {
  const auto roots = rational_roots(f);
  if (roots.empty()) return std::nullopt;
  const Polynomial linear = Polynomial::linear_root(roots.front().value);
  return std::vector<Polynomial>{linear, poly_divmod(f, linear).first};
}

ConstructibleExpr rational_expr(const Rational& q) { return ConstructibleExpr(q); }

// Larger real root of a x^2 + b x + c with nonnegative discriminant:
// -b/(2a) + sqrt(disc/(4a^2)).
ConstructibleExpr quadratic_root_expr(const Polynomial& g) {
  const Rational a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
  const Rational centre = -b / (Rational(2) * a);
  const Rational radicand = (b * b - Rational(4) * a * c) / (Rational(4) * a * a);
  Rational root;
  if (rational_sqrt(radicand, root)) return rational_expr(centre + root);
  const ConstructibleExpr s = ConstructibleExpr::sqrt(rational_expr(radicand));
  return centre.is_zero() ? s : rational_expr(centre) + s;
}

}  // namespace

ConstructibilityVerdict trisectable(const Rational& cos3a) {
  if (abs(cos3a) > Rational(1)) throw DomainError("|cos 3a| must be at most 1, got " + cos3a.to_string());
  const Polynomial f{-cos3a, Rational(-3), Rational(0), Rational(4)};
  ConstructibilityVerdict v;
  if (auto parts = split_off_rational_root(f)) {
    v.constructible = Verdict::Yes;
    v.factors = std::move(*parts);
    const Rational rational_root = -v.factors.front().coeff(0);
    // cos a is the largest root: a = 3a/3 lies in [0, pi/3].
    ConstructibleExpr best = rational_expr(rational_root);
    const ConstructibleExpr other = quadratic_root_expr(v.factors.back());
    if (eval_constructible(other).value > rational_root.to_double()) best = other;
    v.degree = eval_constructible(best).exact ? 1 : 2;
    v.witness_expression = best;
    v.reason = f.to_string() + " has the rational root " + rational_root.to_string() +
               ", so cos a = " + best.to_string() + " lies in an extension of degree at most 2";
    return v;
  }
  v.constructible = Verdict::No;
  v.degree = 3;
  v.witness_polynomial = primitive_part(f);
  v.reason = v.witness_polynomial->to_string() + " has no rational root, so it is irreducible of degree 3";
  return v;
}

ConstructibilityVerdict cube_doubling(const Rational& volume_factor) {
  if (volume_factor.sign() <= 0) throw DomainError("volume factor must be positive");
  const Polynomial f{-volume_factor, Rational(0), Rational(0), Rational(1)};
  ConstructibilityVerdict v;
  if (auto parts = split_off_rational_root(f)) {
    v.constructible = Verdict::Yes;
    v.factors = std::move(*parts);
    v.degree = 1;
    v.witness_expression = rational_expr(-v.factors.front().coeff(0));
    v.reason = "the cube root " + v.witness_expression->to_string() + " is rational";
    return v;
  }
  v.constructible = Verdict::No;
  v.degree = 3;
  v.witness_polynomial = primitive_part(f);
  v.reason = v.witness_polynomial->to_string() + " has no rational root, so it is irreducible of degree 3";
  return v;
}

ConstructibilityVerdict square_circle() {
  ConstructibilityVerdict v;
  v.constructible = Verdict::No;
  v.reason =
      "sqrt(pi) would be constructible, hence algebraic, but pi is transcendental (Lindemann, 1882); "
      "taken as an axiom, not computed";
  return v;
}

ConstructibilityVerdict degree_power_of_two_check(const Polynomial& f, bool witness_root_is_target) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (f.degree() < 1) throw DomainError("a nonzero constant has no roots");
  ConstructibilityVerdict v;
  if (!witness_root_is_target) {
    v.constructible = Verdict::Unknown;
    v.reason = "the target is not asserted to be a root of f";
    return v;
  }
  Polynomial residual = f;
  const auto roots = rational_roots(f);
  for (const auto& r : roots) {
    const Polynomial factor = poly_pow(Polynomial::linear_root(r.value), r.multiplicity);
    residual = poly_divmod(residual, factor).first;
    v.factors.push_back(factor);
  }
  const int d = residual.degree();
  if (d == 0) {
    v.constructible = Verdict::Yes;
    v.degree = 1;
    v.witness_expression = rational_expr(roots.back().value);
    v.reason = "every root of f is rational";
    return v;
  }
  if (d == 2) {
    const Rational disc = residual.coeff(1) * residual.coeff(1) - Rational(4) * residual.coeff(2) * residual.coeff(0);
    v.factors.push_back(residual);
    if (disc.sign() < 0) {
      if (!roots.empty()) {
        v.constructible = Verdict::Yes;
        v.degree = 1;
        v.witness_expression = rational_expr(roots.back().value);
        v.reason = "the real roots of f are rational";
      } else {
        v.constructible = Verdict::Unknown;
        v.reason = "f has no real root";
      }
      return v;
    }
    v.constructible = Verdict::Yes;
    v.degree = roots.empty() ? 2 : std::optional<int>{};
    v.witness_expression = quadratic_root_expr(residual);
    v.reason = "every real root of f lies in a quadratic extension, e.g. " + v.witness_expression->to_string();
    return v;
  }
  if (d == 3 && roots.empty()) {
    v.constructible = Verdict::No;
    v.degree = 3;
    v.witness_polynomial = primitive_part(f);
    v.reason = v.witness_polynomial->to_string() + " has no rational root, so it is irreducible of degree 3";
    return v;
  }
  v.constructible = Verdict::Unknown;
  if (d == 3) {
    v.reason = "f has a rational root and an irreducible cubic factor; which root is the target is not known";
  } else if ((d & (d - 1)) == 0) {
    v.reason = "residual factor of degree " + std::to_string(d) +
               " is a power of two; the degree condition is necessary, not sufficient";
  } else {
    v.reason = "irreducibility of the residual factor of degree " + std::to_string(d) + " is not decided";
  }
  return v;
}

}  // namespace klasika
