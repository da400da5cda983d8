"""Exact polynomial interpolation."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

import sympy as sp
from sympy import QQ, Poly

from backend.exactalg.poly import X, Exact, to_rational


def interpolate(points: Sequence[Tuple[Exact, Exact]], var: sp.Symbol = X) -> Poly:
    """The unique polynomial of degree < len(points) through `points`."""

    if not points:
        raise ValueError("Interpolation needs at least one point.")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("Interpolation nodes must be distinct.")

    data = [(to_rational(x), to_rational(y)) for x, y in points]
    return Poly(sp.expand(sp.interpolate(data, var)), var, domain=QQ)
