#include "klasika/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "klasika/construct.hpp"
#include "klasika/disc.hpp"
#include "klasika/error.hpp"
#include "klasika/forms.hpp"
#include "klasika/ratfun.hpp"
#include "klasika/roots.hpp"

namespace klasika::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxTokenLength = 4096;
constexpr int kMaxDegree = 24;
constexpr std::size_t kMaxDigits = 18;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json = false;
  std::optional<double> tol;
};

struct Output {
  Json payload = Json::object();
  std::string text;
};

std::string show_token(std::string_view token) {
  std::string t(token.substr(0, 40));
  if (token.size() > 40) t += "...";
  return "'" + t + "'";
}

std::string fmt(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

double clean(double x) { return x == 0.0 ? 0.0 : x; }

void check_size(const Rational& r, std::string_view token) {
  const auto too_big = [](const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 10) > kMaxDigits; };
  if (too_big(r.numerator()) || too_big(r.denominator())) {
    throw ParseError("number in " + show_token(token) + " exceeds " + std::to_string(kMaxDigits) + " digits");
  }
}

Rational parse_rational(std::string_view token) {
  if (token.size() > kMaxTokenLength) throw ParseError("token too long");
  try {
    Rational r = Rational::parse(token);
    check_size(r, token);
    return r;
  } catch (const ParseError&) {
    throw ParseError("expected a rational number, got " + show_token(token));
  }
}

std::vector<Rational> parse_rational_list(std::string_view token, std::size_t count) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = token.find(',', start);
    out.push_back(parse_rational(token.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
    if (out.size() > count) break;
  }
  if (out.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " comma-separated rationals, got " + show_token(token));
  }
  return out;
}

Polynomial parse_poly(std::string_view token) {
  if (token.size() > kMaxTokenLength) throw ParseError("polynomial token too long");
  Polynomial f;
  try {
    f = Polynomial::parse(token);
  } catch (const ParseError& e) {
    throw ParseError("cannot parse coefficients " + show_token(token) + ": " + e.what());
  }
  if (f.degree() > kMaxDegree) {
    throw ParseError("degree " + std::to_string(f.degree()) + " of " + show_token(token) + " exceeds " +
                     std::to_string(kMaxDegree));
  }
  for (const Rational& c : f.coefficients()) check_size(c, token);
  return f;
}

double parse_real(std::string_view token) {
  if (token.empty() || token.size() > 64 ||
      token.find_first_not_of("0123456789+-.eE") != std::string_view::npos) {
    throw ParseError("expected a real number, got " + show_token(token));
  }
  const std::string s(token);
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(x)) {
    throw ParseError("expected a real number, got " + show_token(token));
  }
  return x;
}

std::uint64_t parse_u64(std::string_view token) {
  if (token.empty() || token.size() > 20 || token.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("expected a non-negative integer, got " + show_token(token));
  }
  std::uint64_t n = 0;
  for (char ch : token) {
    const auto digit = static_cast<std::uint64_t>(ch - '0');
    if (n > (UINT64_MAX - digit) / 10) throw ParseError("integer " + show_token(token) + " exceeds 2^64 - 1");
    n = n * 10 + digit;
  }
  return n;
}

void expect_count(const std::string& command, const std::vector<std::string>& pos, std::size_t count,
                  const std::string& shape) {
  if (pos.size() != count) {
    throw UsageError(command + " expects " + shape + ", got " + std::to_string(pos.size()) + " argument" +
                     (pos.size() == 1 ? "" : "s"));
  }
}

Json inertia_json(const Inertia& in) { return Json::array({in.plus, in.minus, in.zero}); }

Json verdict_value(Verdict v) {
  switch (v) {
    case Verdict::Yes: return true;
    case Verdict::No: return false;
    case Verdict::Unknown: break;
  }
  return "unknown";
}

void add_verdict(Output& out, const ConstructibilityVerdict& v) {
  out.payload["constructible"] = verdict_value(v.constructible);
  if (v.degree) out.payload["degree"] = *v.degree;
  if (v.witness_polynomial) out.payload["witness_polynomial"] = v.witness_polynomial->to_string();
  if (!v.factors.empty()) {
    Json f = Json::array();
    for (const auto& p : v.factors) f.push_back(p.to_string());
    out.payload["factors"] = f;
  }
  if (v.witness_expression) out.payload["witness_expression"] = v.witness_expression->to_string();
  out.payload["reason"] = v.reason;
  out.text += "constructible: " + std::string(to_string(v.constructible)) + "\n";
  out.text += "reason: " + v.reason + "\n";
  if (!v.factors.empty()) {
    std::string f;
    for (const auto& p : v.factors) f += (f.empty() ? "" : " * ") + ("(" + p.to_string() + ")");
    out.text += "factors: " + f + "\n";
  }
}

Output cmd_disc(const std::vector<std::string>& pos) {
  expect_count("disc", pos, 1, "<coeffs>");
  const Polynomial f = parse_poly(pos[0]);
  if (f.degree() < 2) throw DomainError("discriminant needs degree >= 2, got " + std::to_string(f.degree()));
  const Rational dr = discriminant_resultant(f);
  const Rational dh = discriminant_hankel(f);
  const Rational hdet = hankel_determinant(f);
  Output out;
  out.payload["polynomial"] = f.to_string();
  out.payload["degree"] = f.degree();
  out.payload["discriminant_resultant"] = dr.to_string();
  out.payload["discriminant_hankel"] = dh.to_string();
  out.payload["hankel_determinant"] = hdet.to_string();
  out.payload["ordered_pair_product"] = ordered_pair_product(hdet, f.degree()).to_string();
  out.payload["agree"] = dr == dh;
  out.text = "polynomial: " + f.to_string() + "\n" + "discriminant (resultant): " + dr.to_string() + "\n" +
             "discriminant (power sums): " + dh.to_string() + "\n" + "agree: " + (dr == dh ? "yes" : "no") + "\n";
  return out;
}

Output cmd_repeated(const std::vector<std::string>& pos) {
  expect_count("repeated", pos, 1, "<coeffs>");
  const Polynomial f = parse_poly(pos[0]);
  const bool rep = has_repeated_roots(f);
  const Polynomial g = f.degree() >= 1 ? poly_gcd(f, poly_derivative(f)) : Polynomial::constant(1);
  Output out;
  out.payload["polynomial"] = f.to_string();
  out.payload["repeated_roots"] = rep;
  out.payload["gcd_with_derivative"] = g.to_string();
  out.text = "polynomial: " + f.to_string() + "\nrepeated roots: " + (rep ? "yes" : "no") +
             "\ngcd(f, f'): " + g.to_string() + "\n";
  return out;
}

Output cmd_solve(const std::vector<std::string>& pos, const Options& opts) {
  expect_count("solve", pos, 1, "<coeffs>");
  const Polynomial f = parse_poly(pos[0]);
  if (f.degree() != 2 && f.degree() != 3) {
    throw DomainError("solve handles degree 2 or 3, got degree " + std::to_string(f.degree()));
  }
  std::vector<Complex> roots;
  Output out;
  out.payload["polynomial"] = f.to_string();
  if (f.degree() == 2) {
    const auto [r1, r2] = solve_quadratic(f);
    roots = {r1, r2};
    out.payload["method"] = "quadratic";
  } else {
    const CubicRoots c = solve_cubic_cardano(f);
    roots.assign(c.roots.begin(), c.roots.end());
    out.payload["method"] = "cardano";
    out.payload["discriminant_sign"] = c.discriminant_sign;
  }
  const double tol = opts.tol.value_or(residual_tolerance(f));
  bool ok = true;
  Json arr = Json::array();
  out.text = "polynomial: " + f.to_string() + "\n";
  for (const Complex& z : roots) {
    const double res = std::abs(f.evaluate(z));
    ok = ok && res < tol;
    arr.push_back({{"re", clean(z.real())}, {"im", clean(z.imag())}, {"residual", clean(res)}});
    out.text += "root: " + fmt(z.real());
    if (z.imag() != 0.0) out.text += (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
    out.text += "\n";
  }
  out.payload["roots"] = arr;
  out.payload["tolerance"] = tol;
  out.payload["within_tolerance"] = ok;
  out.text += std::string("residuals within tolerance: ") + (ok ? "yes" : "no") + "\n";
  return out;
}

Output cmd_depress(const std::vector<std::string>& pos) {
  expect_count("depress", pos, 1, "<coeffs>");
  const Polynomial f = parse_poly(pos[0]);
  const DepressedPolynomial d = depress(f);
  Output out;
  out.payload["polynomial"] = f.to_string();
  out.payload["depressed"] = d.poly.to_string('y');
  out.payload["depressed_coefficients"] = d.poly.to_coeff_list();
  out.payload["shift"] = d.shift.to_string();
  out.text = "depressed: " + d.poly.to_string('y') + "\nsubstitution: x = y " +
             (d.shift.sign() < 0 ? "+ " + (-d.shift).to_string() : "- " + d.shift.to_string()) + "\n";
  return out;
}

Output cmd_classify_conic(const std::vector<std::string>& pos) {
  expect_count("classify-conic", pos, 1, "a,b,c,d,e,lambda");
  const auto v = parse_rational_list(pos[0], 6);
  const ConicClassification c = analyze_conic(v[0], v[1], v[2], v[3], v[4], v[5]);
  Output out;
  out.payload["kind"] = std::string(to_string(c.kind));
  out.payload["quadratic_inertia"] = inertia_json(c.quadratic_inertia);
  out.payload["quadratic_det"] = c.quadratic_det.to_string();
  out.payload["full_det"] = c.full_det.to_string();
  out.payload["translated_constant"] = c.translated_constant ? Json(c.translated_constant->to_string()) : Json();
  out.text = "kind: " + std::string(to_string(c.kind)) + "\ninertia of quadratic part: " +
             c.quadratic_inertia.to_string() + "\n";
  return out;
}

Output cmd_classify_quadric(const std::vector<std::string>& pos) {
  expect_count("classify-quadric", pos, 1, "a,b,c,d,e,f");
  const auto v = parse_rational_list(pos[0], 6);
  const TernaryForm f = TernaryForm::from_equation(v[0], v[1], v[2], v[3], v[4], v[5]);
  const QuadricClassification q = classify_quadric(f);
  Output out;
  out.payload["inertia"] = inertia_json(q.inertia);
  out.payload["kind"] = std::string(to_string(q.kind));
  out.payload["char_poly"] = char_poly(form_to_matrix(f)).to_string('t');
  out.payload["degeneracy_note"] = q.degeneracy_note ? Json(*q.degeneracy_note) : Json();
  out.text = "inertia: " + q.inertia.to_string() + "\nkind: " + std::string(to_string(q.kind)) + "\n";
  if (q.degeneracy_note) out.text += "note: " + *q.degeneracy_note + "\n";
  return out;
}

Output cmd_diagonalize(const std::vector<std::string>& pos) {
  expect_count("diagonalize", pos, 1, "a,b,c,d,e,f");
  const auto v = parse_rational_list(pos[0], 6);
  const TernaryForm f = TernaryForm::from_equation(v[0], v[1], v[2], v[3], v[4], v[5]);
  const DiagonalSubstitution d = diagonal_substitution(f);
  const Diagonalization full = orthogonal_diagonalize(form_to_matrix(f));
  Output out;
  Json sub = Json::array();
  Json coeffs = Json::array();
  static constexpr const char* kVars[] = {"x", "y", "z"};
  static constexpr const char* kPrimed[] = {"x'", "y'", "z'"};
  std::string diag;
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    std::string line = std::string(kPrimed[i]) + " =";
    bool first = true;
    for (std::size_t j = 0; j < 3; ++j) {
      const double c = clean(d.substitution[i][j]);
      row.push_back(c);
      if (std::abs(c) < 1e-15) continue;
      line += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
      line += fmt(std::abs(c)) + " " + kVars[j];
      first = false;
    }
    sub.push_back(row);
    coeffs.push_back(clean(d.coefficients[i]));
    out.text += line + "\n";
    diag += (i == 0 ? "" : " + ") + ("(" + fmt(d.coefficients[i]) + ") " + kPrimed[i] + "^2");
  }
  out.payload["substitution"] = sub;
  out.payload["coefficients"] = coeffs;
  out.payload["residual"] = full.residual;
  out.payload["orthogonality_error"] = full.orthogonality_error;
  out.text += "F = " + diag + "\n";
  return out;
}

Output cmd_ngon(const std::vector<std::string>& pos) {
  expect_count("ngon", pos, 1, "<n>");
  const std::uint64_t n = parse_u64(pos[0]);
  const ConstructibilityVerdict v = ngon_constructible(n);
  Output out;
  out.payload["n"] = n;
  out.payload["constructible"] = verdict_value(v.constructible);
  Json fac = Json::array();
  std::string fac_text;
  for (const auto& pp : v.factorization) {
    fac.push_back(Json::array({pp.prime, pp.exponent}));
    fac_text += (fac_text.empty() ? "" : " * ") + std::to_string(pp.prime) +
                (pp.exponent > 1 ? "^" + std::to_string(pp.exponent) : "");
  }
  out.payload["factorization"] = fac;
  out.payload["witness_prime"] = v.witness_prime ? Json(*v.witness_prime) : Json();
  out.payload["reason"] = v.reason;
  out.text = std::to_string(n) + "-gon: " + (v.constructible == Verdict::Yes ? "constructible" : "not constructible") +
             "\nfactorization: " + fac_text + "\nreason: " + v.reason + "\n";
  return out;
}

Output cmd_trisect(const std::vector<std::string>& pos) {
  expect_count("trisect", pos, 1, "<cos 3a as p/q>");
  const Rational c = parse_rational(pos[0]);
  const ConstructibilityVerdict v = trisectable(c);
  Output out;
  out.payload["cos3a"] = c.to_string();
  out.text = "cos 3a = " + c.to_string() + "\n";
  add_verdict(out, v);
  return out;
}

Output cmd_double_cube(const std::vector<std::string>& pos) {
  if (pos.size() > 1) throw UsageError("double-cube expects at most one volume factor");
  const Rational k = pos.empty() ? Rational(2) : parse_rational(pos[0]);
  Output out;
  out.payload["volume_factor"] = k.to_string();
  add_verdict(out, cube_doubling(k));
  return out;
}

Output cmd_square_circle(const std::vector<std::string>& pos) {
  expect_count("square-circle", pos, 0, "no arguments");
  Output out;
  add_verdict(out, square_circle());
  return out;
}

Output cmd_construct_eval(const std::vector<std::string>& pos) {
  if (pos.empty()) throw UsageError("construct-eval expects an expression");
  std::string text;
  for (const auto& p : pos) text += (text.empty() ? "" : " ") + p;
  const ConstructibleExpr e = ConstructibleExpr::parse(text);
  const ConstructibleValue v = eval_constructible(e);
  Output out;
  out.payload["expression"] = e.to_string();
  out.payload["value"] = clean(v.value);
  out.payload["exact"] = v.exact ? Json(v.exact->to_string()) : Json();
  out.payload["sqrt_count"] = v.sqrt_count;
  out.payload["degree_bound"] = v.degree_bound.get_str();
  out.text = "expression: " + e.to_string() + "\nvalue: " + (v.exact ? v.exact->to_string() : fmt(v.value)) +
             "\ndegree bound: " + v.degree_bound.get_str() + "\n";
  return out;
}

std::pair<Polynomial, Polynomial> parse_fraction(const std::string& command, const std::vector<std::string>& pos) {
  if (pos.size() != 3 || pos[1] != "/") throw UsageError(command + " expects <p-coeffs> / <q-coeffs>");
  return {parse_poly(pos[0]), parse_poly(pos[2])};
}

Output cmd_integrate(const std::vector<std::string>& pos) {
  const auto [p, q] = parse_fraction("integrate", pos);
  const SymbolicAntiderivative a = integrate_rational(p, q);
  const PartialFractions pf = partial_fractions(p, q);
  Output out;
  out.payload["numerator"] = p.to_string();
  out.payload["denominator"] = q.to_string();
  out.payload["partial_fractions"] = pf.to_string();
  out.payload["antiderivative"] = a.to_string();
  out.text = a.to_string() + "\n";
  return out;
}

Output cmd_partfrac(const std::vector<std::string>& pos) {
  const auto [p, q] = parse_fraction("partfrac", pos);
  const PartialFractions pf = partial_fractions(p, q);
  Output out;
  out.payload["numerator"] = p.to_string();
  out.payload["denominator"] = q.to_string();
  out.payload["polynomial_part"] = pf.polynomial_part.to_string();
  Json lin = Json::array();
  for (const auto& t : pf.linear_terms) {
    lin.push_back({{"coefficient", t.coefficient.to_string()}, {"root", t.root.to_string()}, {"power", t.power}});
  }
  Json quad = Json::array();
  for (const auto& t : pf.quadratic_terms) {
    quad.push_back({{"b", t.b.to_string()}, {"c", t.c.to_string()}, {"p", t.p.to_string()}, {"q", t.q.to_string()}});
  }
  out.payload["linear_terms"] = lin;
  out.payload["quadratic_terms"] = quad;
  out.payload["text"] = pf.to_string();
  out.text = pf.to_string() + "\n";
  return out;
}

std::optional<double> precision_tolerance() {
  const char* env = std::getenv("KLASIKA_PRECISION");
  if (env == nullptr || *env == '\0') return std::nullopt;
  const std::string_view s(env);
  if (s.size() > 2 || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw UsageError("KLASIKA_PRECISION must be an integer number of digits between 1 and 15");
  }
  const int digits = std::atoi(env);
  if (digits < 1 || digits > 15) throw UsageError("KLASIKA_PRECISION must be between 1 and 15");
  return std::pow(10.0, -digits);
}

Output cmd_ellipse(const std::vector<std::string>& pos, const Options& opts) {
  expect_count("ellipse", pos, 3, "area|perimeter <a> <b>");
  const double a = parse_real(pos[1]);
  const double b = parse_real(pos[2]);
  Output out;
  out.payload["a"] = a;
  out.payload["b"] = b;
  if (pos[0] == "area") {
    const double area = ellipse_area(a, b);
    out.payload["area"] = area;
    out.text = "area: " + fmt(area) + "\n";
  } else if (pos[0] == "perimeter") {
    const double p = ellipse_perimeter(a, b);
    out.payload["perimeter"] = p;
    out.payload["e2"] = clean((a - b) * (a + b) / (a * a));
    out.payload["method"] = "agm";
    out.text = "perimeter: " + fmt(p) + "\n";
    std::optional<double> tol = opts.tol;
    if (!tol) tol = precision_tolerance();
    if (tol) {
      if (!(*tol > 0.0)) throw UsageError("--tol must be positive");
      const double s = ellipse_perimeter(a, b, EllipticMethod::Simpson, *tol);
      out.payload["simpson"] = s;
      out.payload["simpson_tolerance"] = *tol;
      out.text += "perimeter (adaptive Simpson): " + fmt(s) + "\n";
    }
  } else {
    throw UsageError("ellipse expects 'area' or 'perimeter', got " + show_token(pos[0]));
  }
  return out;
}

Output cmd_param(const std::vector<std::string>& pos) {
  expect_count("param", pos, 4, "<kind> <a> <b> <t>");
  ConicParam c;
  c.shape = parse_conic_shape(pos[0]);
  c.a = parse_real(pos[1]);
  c.b = parse_real(pos[2]);
  const double t = parse_real(pos[3]);
  const Point2 p = parametrize_conic(c, t);
  Output out;
  out.payload["kind"] = std::string(to_string(c.shape));
  out.payload["a"] = c.a;
  out.payload["b"] = c.b;
  out.payload["t"] = t;
  out.payload["x"] = clean(p.x);
  out.payload["y"] = clean(p.y);
  out.payload["residual"] = clean(c.implicit_residual(p.x, p.y));
  out.text = "(" + fmt(p.x) + ", " + fmt(p.y) + ")\n";
  return out;
}

Output dispatch(const std::string& command, const std::vector<std::string>& pos, const Options& opts) {
  if (command == "disc") return cmd_disc(pos);
  if (command == "repeated") return cmd_repeated(pos);
  if (command == "solve") return cmd_solve(pos, opts);
  if (command == "depress") return cmd_depress(pos);
  if (command == "classify-conic") return cmd_classify_conic(pos);
  if (command == "classify-quadric") return cmd_classify_quadric(pos);
  if (command == "diagonalize") return cmd_diagonalize(pos);
  if (command == "ngon") return cmd_ngon(pos);
  if (command == "trisect") return cmd_trisect(pos);
  if (command == "double-cube") return cmd_double_cube(pos);
  if (command == "square-circle") return cmd_square_circle(pos);
  if (command == "construct-eval") return cmd_construct_eval(pos);
  if (command == "integrate") return cmd_integrate(pos);
  if (command == "partfrac") return cmd_partfrac(pos);
  if (command == "ellipse") return cmd_ellipse(pos, opts);
  if (command == "param") return cmd_param(pos);
  throw UsageError("unknown subcommand " + show_token(command));
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace); }

CommandResult failure(const std::string& command, bool json, int code, const std::string& kind,
                      const std::string& message) {
  CommandResult r;
  r.status = Status::Error;
  r.exit_code = code;
  r.json = json;
  Json j = Json::object();
  j["error"] = {{"kind", kind}, {"message", message}};
  j["command"] = command.empty() ? Json() : Json(command);
  j["schema"] = 1;
  j["status"] = "error";
  r.payload_json = dump(j);
  r.human_text = "klasika: " + kind + " error: " + message + "\n";
  if (code == kExitUsage) r.human_text += "run 'klasika help' for usage\n";
  return r;
}

}  // namespace

std::string usage() {
  return "usage: klasika <command> [args] [--json] [--tol <float>]\n"
         "coefficients are comma-separated, lowest degree first: 2,-3,1 is x^2 - 3x + 2\n"
         "\n"
         "  disc <coeffs>                      discriminant by resultant and by power sums\n"
         "  repeated <coeffs>                  repeated-root test\n"
         "  solve <coeffs>                     roots of a quadratic or cubic with residuals\n"
         "  depress <coeffs>                   remove the second-highest term\n"
         "  classify-conic a,b,c,d,e,lambda    ax^2+bxy+cy^2+dx+ey = lambda\n"
         "  classify-quadric a,b,c,d,e,f       ax^2+by^2+cz^2+dxy+exz+fyz\n"
         "  diagonalize a,b,c,d,e,f            orthogonal substitution to a diagonal form\n"
         "  ngon <n>                           regular n-gon constructibility\n"
         "  trisect <p/q>                      trisection of the angle with cos 3a = p/q\n"
         "  double-cube [k]                    cube root of the volume factor k (default 2)\n"
         "  square-circle                      squaring the circle\n"
         "  construct-eval <expr>              evaluate e.g. 'sqrt(2+sqrt(2))/4'\n"
         "  integrate <p> / <q>                antiderivative of p/q\n"
         "  partfrac <p> / <q>                 partial fractions of p/q\n"
         "  ellipse area|perimeter <a> <b>     ellipse with semi-axes a >= b\n"
         "  param <kind> <a> <b> <t>           rational parametrization (circle, ellipse, hyperbola, parabola)\n"
         "\n"
         "environment: KLASIKA_PRECISION=<digits> adds an adaptive Simpson cross-check to ellipse perimeter\n"
         "exit codes: 0 ok, 1 domain error, 2 usage error\n";
}

std::string CommandResult::stdout_text() const {
  if (json) return payload_json + "\n";
  return status == Status::Ok ? human_text : std::string();
}

std::string CommandResult::stderr_text() const {
  if (json || status == Status::Ok) return {};
  return human_text;
}

CommandResult run(const std::vector<std::string>& args) {
  Options opts;
  std::vector<std::string> pos;
  std::string command;
  for (const auto& a : args) {
    if (a == "--json") opts.json = true;
  }
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--json") continue;
      if (a == "--tol") {
        if (i + 1 >= args.size()) throw UsageError("--tol needs a value");
        const double t = parse_real(args[++i]);
        if (!(t > 0.0)) throw UsageError("--tol must be positive, got " + show_token(args[i]));
        opts.tol = t;
        continue;
      }
      if (a == "--help" || a == "-h") {
        command = "help";
        continue;
      }
      if (a.size() > 2 && a.compare(0, 2, "--") == 0) throw UsageError("unknown flag " + show_token(a));
      if (command.empty()) {
        command = a;
      } else {
        pos.push_back(a);
      }
    }
    if (command.empty()) throw UsageError("missing command");
    if (command == "help") {
      CommandResult r;
      r.json = opts.json;
      r.human_text = usage();
      Json j = Json::object();
      j["usage"] = usage();
      j["schema"] = 1;
      j["status"] = "ok";
      r.payload_json = dump(j);
      return r;
    }
    Output out = dispatch(command, pos, opts);
    CommandResult r;
    r.json = opts.json;
    r.human_text = std::move(out.text);
    out.payload["command"] = command;
    out.payload["schema"] = 1;
    out.payload["status"] = "ok";
    r.payload_json = dump(out.payload);
    return r;
  } catch (const UsageError& e) {
    return failure(command, opts.json, kExitUsage, "usage", e.what());
  } catch (const ParseError& e) {
    return failure(command, opts.json, kExitUsage, "parse", e.what());
  } catch (const UnsupportedError& e) {
    return failure(command, opts.json, kExitDomain, "unsupported", e.what());
  } catch (const DomainError& e) {
    return failure(command, opts.json, kExitDomain, "domain", e.what());
  } catch (const std::exception& e) {
    return failure(command, opts.json, kExitDomain, "internal", e.what());
  }
}

}  // namespace klasika::cli
