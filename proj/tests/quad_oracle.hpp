#pragma once

// Quad-precision evaluation of an antiderivative, independent of the
// library's long double evaluate(). Used by the differentiation oracle so
// that cancellation in F(x+h) - F(x-h) stays far below the tolerance.

#include <quadmath.h>

#include <type_traits>
#include <variant>

#include "klasika/ratfun.hpp"

namespace support {

using quad = __float128;

inline quad to_quad(const klasika::Rational& r) {
  // Three double limbs give about 159 significant bits.
  mpq_class rest = r.raw();
  quad out = 0;
  for (int i = 0; i < 3; ++i) {
    const double limb = rest.get_d();
    out += limb;
    rest -= mpq_class(limb);
  }
  return out;
}

inline quad evaluate_quad(const klasika::SymbolicAntiderivative& f, quad x) {
  namespace t = klasika::term;
  quad sum = 0;
  for (const auto& term : f.terms) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, t::PolyTerm>) {
            quad acc = 0;
            for (int i = v.poly.degree(); i >= 0; --i) acc = acc * x + to_quad(v.poly.coeff(i));
            sum += acc;
          } else if constexpr (std::is_same_v<T, t::LogAbs>) {
            sum += to_quad(v.coefficient) * logq(fabsq(x - to_quad(v.root)));
          } else if constexpr (std::is_same_v<T, t::PowerTerm>) {
            sum += to_quad(v.coefficient) / powq(x - to_quad(v.root), v.exponent);
          } else if constexpr (std::is_same_v<T, t::LogQuadratic>) {
            sum += to_quad(v.coefficient) * logq(x * x + to_quad(v.p) * x + to_quad(v.q));
          } else {
            const quad s = sqrtq(to_quad(v.scale_squared));
            sum += to_quad(v.coefficient) / s * atanq((x + to_quad(v.shift)) / s);
          }
        },
        term);
  }
  return sum;
}

/// Richardson-extrapolated central difference of F at x, in quad precision.
inline long double derivative(const klasika::SymbolicAntiderivative& f, long double x, long double h) {
  const quad qx = x, qh = h;
  auto central = [&](quad step) { return (evaluate_quad(f, qx + step) - evaluate_quad(f, qx - step)) / (2 * step); };
  return static_cast<long double>((4 * central(qh / 2) - central(qh)) / 3);
}

}  // namespace support
