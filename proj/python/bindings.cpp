#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klasika/cli.hpp"
#include "klasika/construct.hpp"
#include "klasika/disc.hpp"
#include "klasika/error.hpp"
#include "klasika/forms.hpp"
#include "klasika/ratfun.hpp"
#include "klasika/roots.hpp"

namespace py = pybind11;
using namespace klasika;

namespace {

// Exact values cross the boundary as "p/q" strings; the Python package turns
// them into fractions.Fraction.
Rational R(const std::string& s) { return Rational::parse(s); }

Polynomial poly(const std::string& s) { return Polynomial::parse(s); }

std::vector<std::string> coeff_strings(const Polynomial& f) {
  std::vector<std::string> out;
  for (int i = 0; i <= f.degree(); ++i) out.push_back(f.coeff(i).to_string());
  return out;
}

TernaryForm ternary(const std::vector<std::string>& c) {
  if (c.size() != 6) throw ParseError("a ternary form needs 6 coefficients");
  return TernaryForm::from_equation(R(c[0]), R(c[1]), R(c[2]), R(c[3]), R(c[4]), R(c[5]));
}

py::dict verdict(const ConstructibilityVerdict& v) {
  py::dict d;
  d["constructible"] = std::string(to_string(v.constructible));
  d["reason"] = v.reason;
  d["degree"] = v.degree ? py::object(py::int_(*v.degree)) : py::object(py::none());
  d["witness_polynomial"] = v.witness_polynomial ? py::object(py::str(v.witness_polynomial->to_string())) : py::none();
  d["witness_prime"] = v.witness_prime ? py::object(py::int_(*v.witness_prime)) : py::object(py::none());
  std::vector<std::string> factors;
  for (const auto& f : v.factors) factors.push_back(f.to_string());
  d["factors"] = factors;
  d["witness_expression"] =
      v.witness_expression ? py::object(py::str(v.witness_expression->to_string())) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polynomial, quadratic form, constructibility and rational integration routines";

  static py::exception<Error> base(m, "Error");
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<UnsupportedError> unsupported(m, "UnsupportedError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const UnsupportedError& e) {
      py::set_error(unsupported, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("discriminant", [](const std::string& f) { return discriminant_resultant(poly(f)).to_string(); });
  m.def("discriminant_hankel", [](const std::string& f) { return discriminant_hankel(poly(f)).to_string(); });
  m.def("has_repeated_roots", [](const std::string& f) { return has_repeated_roots(poly(f)); });
  m.def("depress", [](const std::string& f) {
    const DepressedPolynomial d = depress(poly(f));
    return py::make_tuple(coeff_strings(d.poly), d.shift.to_string());
  });
  m.def("solve_cubic", [](const std::string& f) {
    const CubicRoots r = solve_cubic_cardano(poly(f));
    return std::vector<std::complex<double>>(r.roots.begin(), r.roots.end());
  });

  m.def("classify_conic", [](const std::vector<std::string>& c) {
    if (c.size() != 6) throw ParseError("a conic needs 6 coefficients a,b,c,d,e,lambda");
    return std::string(to_string(classify_conic(R(c[0]), R(c[1]), R(c[2]), R(c[3]), R(c[4]), R(c[5]))));
  });
  m.def("classify_quadric", [](const std::vector<std::string>& c) {
    const QuadricClassification q = classify_quadric(ternary(c));
    py::dict d;
    d["inertia"] = py::make_tuple(q.inertia.plus, q.inertia.minus, q.inertia.zero);
    d["kind"] = std::string(to_string(q.kind));
    d["degeneracy_note"] = q.degeneracy_note ? py::object(py::str(*q.degeneracy_note)) : py::object(py::none());
    return d;
  });
  m.def("diagonalize", [](const std::vector<std::string>& c) {
    const DiagonalSubstitution s = diagonal_substitution(ternary(c));
    return py::make_tuple(s.substitution, s.coefficients);
  });

  m.def("construct_eval", [](const std::string& text) {
    const ConstructibleValue v = eval_constructible(ConstructibleExpr::parse(text));
    py::dict d;
    d["value"] = v.value;
    d["exact"] = v.exact ? py::object(py::str(v.exact->to_string())) : py::object(py::none());
    d["sqrt_count"] = v.sqrt_count;
    d["degree_bound"] = v.degree_bound.get_str();
    return d;
  });
  m.def("ngon", [](std::uint64_t n) { return verdict(ngon_constructible(n)); });
  m.def("trisect", [](const std::string& c) { return verdict(trisectable(R(c))); });
  m.def("double_cube", [](const std::string& c) { return verdict(cube_doubling(R(c))); });
  m.def("square_circle", [] { return verdict(square_circle()); });

  m.def("partial_fractions",
        [](const std::string& p, const std::string& q) { return partial_fractions(poly(p), poly(q)).to_string(); });
  m.def("integrate",
        [](const std::string& p, const std::string& q) { return integrate_rational(poly(p), poly(q)).to_string(); });
  m.def("integrate_eval", [](const std::string& p, const std::string& q, double x) {
    return static_cast<double>(integrate_rational(poly(p), poly(q)).evaluate(x));
  });
  m.def("ellipse_area", &ellipse_area);
  m.def("ellipse_perimeter", [](double a, double b) { return ellipse_perimeter(a, b); });
  m.def("parametrize", [](const std::string& shape, double a, double b, double t) {
    const ConicParam c{parse_conic_shape(shape), a, b};
    const Point2 p = parametrize_conic(c, t);
    return py::make_tuple(p.x, p.y);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    const cli::CommandResult r = cli::run(args);
    return py::make_tuple(r.exit_code, r.stdout_text(), r.stderr_text());
  });
}
