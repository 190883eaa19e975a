"""Exact polynomial discriminants, quadratic forms, ruler-and-compass
constructibility and rational-function integration.

Polynomials are given as ascending coefficient sequences (ints, Fractions or
"p/q" strings) or as the comma-separated text form "-1,-6,0,8".
"""

from fractions import Fraction

from . import _core
from ._core import DomainError, Error, ParseError, UnsupportedError

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "UnsupportedError",
    "classify_conic",
    "classify_quadric",
    "construct_eval",
    "depress",
    "diagonalize",
    "discriminant",
    "discriminant_hankel",
    "double_cube",
    "ellipse_area",
    "ellipse_perimeter",
    "has_repeated_roots",
    "integrate",
    "integrate_eval",
    "ngon",
    "parametrize",
    "partial_fractions",
    "run_cli",
    "solve_cubic",
    "square_circle",
    "trisect",
]


def _num(x):
    if isinstance(x, str):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected int, Fraction or str, got {type(x).__name__}")
    return str(x)


def _poly(coeffs):
    if isinstance(coeffs, str):
        return coeffs
    return ",".join(_num(c) for c in coeffs)


def discriminant(coeffs):
    return Fraction(_core.discriminant(_poly(coeffs)))


def discriminant_hankel(coeffs):
    return Fraction(_core.discriminant_hankel(_poly(coeffs)))


def has_repeated_roots(coeffs):
    return _core.has_repeated_roots(_poly(coeffs))


def depress(coeffs):
    """(depressed coefficients, shift) with x = y - shift."""
    poly, shift = _core.depress(_poly(coeffs))
    return [Fraction(c) for c in poly], Fraction(shift)


def solve_cubic(coeffs):
    return _core.solve_cubic(_poly(coeffs))


def classify_conic(a, b, c, d, e, lam):
    """Kind of a x^2 + b xy + c y^2 + d x + e y = lam."""
    return _core.classify_conic([_num(v) for v in (a, b, c, d, e, lam)])


def classify_quadric(a, b, c, xy, xz, yz):
    return _core.classify_quadric([_num(v) for v in (a, b, c, xy, xz, yz)])


def diagonalize(a, b, c, xy, xz, yz):
    """(Q, coefficients): x' = Q x turns the form into sum c_i x'_i^2."""
    return _core.diagonalize([_num(v) for v in (a, b, c, xy, xz, yz)])


def construct_eval(expression):
    out = _core.construct_eval(expression)
    if out["exact"] is not None:
        out["exact"] = Fraction(out["exact"])
    out["degree_bound"] = int(out["degree_bound"])
    return out


def ngon(n):
    return _core.ngon(n)


def trisect(cos3a):
    return _core.trisect(_num(cos3a))


def double_cube(volume_factor=2):
    return _core.double_cube(_num(volume_factor))


def square_circle():
    return _core.square_circle()


def partial_fractions(p, q):
    return _core.partial_fractions(_poly(p), _poly(q))


def integrate(p, q):
    return _core.integrate(_poly(p), _poly(q))


def integrate_eval(p, q, x):
    return _core.integrate_eval(_poly(p), _poly(q), x)


ellipse_area = _core.ellipse_area
ellipse_perimeter = _core.ellipse_perimeter
parametrize = _core.parametrize


def run_cli(args):
    """(exit code, stdout, stderr) of the command-line front end."""
    return _core.run_cli(list(args))
