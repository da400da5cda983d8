"""Exact binomial coefficients, including negative upper index.

Conventions: C(alpha, 0) = 1, C(alpha, k) = 0 for k < 0, and for k > 0
C(alpha, k) = alpha (alpha - 1) ... (alpha - k + 1) / k! for any rational alpha.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from backend.core.cache import factorial
from backend.core.error_handler import IntegralityError


Exact = Union[int, Fraction]


def gen_binom(alpha: Exact, k: int) -> Fraction:
    """Generalized binomial coefficient C(alpha, k) as an exact rational."""

    if k < 0:
        return Fraction(0)
    alpha = Fraction(alpha)
    falling = math.prod((alpha - i for i in range(k)), start=Fraction(1))
    return falling / factorial(k)


def binom(n: int, k: int) -> int:
    """Integer binomial coefficient with the generalized conventions."""

    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return exact_int(gen_binom(n, k), f"C({n}, {k})")


def exact_int(value: Exact, what: str = "value") -> int:
    """Return `value` as an int, or raise IntegralityError if it has a remainder."""

    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} evaluated to the non-integer {value}.")
    return value.numerator
