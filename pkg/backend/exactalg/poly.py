"""Exact polynomials and rational functions over the rationals.

Polynomials are sympy `Poly` objects over QQ in one variable. `RatFunc` keeps a pair of
them in canonical form: common factors cancelled, denominator monic.

Rendering:
- ASCII: descending powers with explicit `*` (sympy's string printer). Rational functions print
  with integer coefficients and the integer content pulled out in front.
- JSON: {"num_coeffs": [[p, q], ...], "den_coeffs": [[p, q], ...]} in ascending degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

import sympy as sp
from sympy import QQ, Poly


N = sp.Symbol("n")
M = sp.Symbol("m")
LAMBDA1 = sp.Symbol("lambda1")
X = sp.Symbol("x")

Exact = Union[int, Fraction]


def to_rational(value: Exact) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def to_fraction(value: Any) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def make_poly(coeffs: Sequence[Exact], var: sp.Symbol = X) -> Poly:
    """Polynomial from ascending-degree coefficients."""

    if not coeffs:
        return Poly(0, var, domain=QQ)
    return Poly([to_rational(c) for c in reversed(list(coeffs))], var, domain=QQ)


def linear(var: sp.Symbol, shift: Exact, scale: Exact = 1) -> Poly:
    """scale * var + shift."""

    return make_poly([shift, scale], var)


def coefficients(poly: Poly) -> List[Fraction]:
    """Ascending-degree coefficients; the zero polynomial gives [0]."""

    return [to_fraction(c) for c in reversed(poly.all_coeffs())]


def evaluate(poly: Poly, at: Exact) -> Fraction:
    return to_fraction(poly.eval(to_rational(at)))


def degree(poly: Poly) -> int:
    """Degree, with -1 for the zero polynomial."""

    return -1 if poly.is_zero else int(poly.degree())


def render_poly(poly: Poly) -> str:
    return sp.sstr(poly.as_expr(), order="lex")


def _pairs(poly: Poly) -> List[List[int]]:
    return [[c.numerator, c.denominator] for c in coefficients(poly)]


def poly_to_dict(poly: Poly) -> Dict[str, Any]:
    return {"num_coeffs": _pairs(poly), "den_coeffs": [[1, 1]]}


@dataclass(frozen=True)
class RatFunc:
    """num / den with gcd(num, den) = 1 and a monic denominator."""

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("Rational function with a zero denominator.")
        if num.gens != den.gens:
            raise ValueError("Numerator and denominator must use the same variable.")

        g = num.gcd(den)
        if not g.is_zero and degree(g) > 0:
            num = num.exquo(g)
            den = den.exquo(g)

        lc = den.LC()
        object.__setattr__(self, "num", num.quo_ground(lc))
        object.__setattr__(self, "den", den.monic())

    @property
    def var(self) -> sp.Symbol:
        return self.num.gens[0]

    @property
    def num_degree(self) -> int:
        return degree(self.num)

    @property
    def den_degree(self) -> int:
        return degree(self.den)

    def evaluate(self, at: Exact) -> Fraction:
        den = evaluate(self.den, at)
        if den == 0:
            raise ZeroDivisionError(f"Denominator vanishes at {at}.")
        return evaluate(self.num, at) / den

    def cross_equal(self, other: "RatFunc") -> bool:
        """num1 * den2 == num2 * den1, independent of how either side is normalized."""

        return (self.num * other.den - other.num * self.den).is_zero

    def integer_form(self) -> Tuple[int, Poly, int, Poly]:
        """(a, P, b, Q) with num / den = (a * P) / (b * Q), P and Q primitive over ZZ, gcd(a, b) = 1."""

        fn, num = self.num.clear_denoms(convert=True)
        fd, den = self.den.clear_denoms(convert=True)
        cn, num = num.primitive()
        cd, den = den.primitive()
        a, b = int(cn) * int(fd), int(cd) * int(fn)
        g = sp.igcd(a, b)
        return a // g, num, b // g, den

    def render(self) -> str:
        """Integer-content form, e.g. (n**3 + 6*n**2 + 3*n + 2)/(4*(2*n + 1))."""

        if self.num.is_zero:
            return "0"
        a, num, b, den = self.integer_form()
        top = render_poly(num) if a == 1 else f"{a}*({render_poly(num)})"
        if degree(den) == 0:
            return top if b == 1 else f"({top})/{b}"
        bottom = render_poly(den) if b == 1 else f"{b}*({render_poly(den)})"
        return f"({top})/({bottom})"

    def to_dict(self) -> Dict[str, Any]:
        return {"num_coeffs": _pairs(self.num), "den_coeffs": _pairs(self.den)}

    @classmethod
    def from_expr(cls, expr: Any, var: sp.Symbol) -> "RatFunc":
        num, den = sp.fraction(sp.together(sp.sympify(expr)))
        return cls(Poly(num, var, domain=QQ), Poly(den, var, domain=QQ))
