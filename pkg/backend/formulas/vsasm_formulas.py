"""Vertically symmetric ASM counts.

A_V(1) = 1 is taken as the empty case so that the refined formula and the
staircase sum can be evaluated at n = 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from backend.core.cache import cache_data, factorial
from backend.formulas.binomial import binom, exact_int


@cache_data()
def vsasm_total(n: int) -> int:
    """A_V(2n+1) = 2^-n prod_{j=1}^{n} (6j-2)! (2j-1)! / ((4j-1)! (4j-2)!)."""

    if n < 0:
        raise ValueError(f"A_V(2n+1) needs n >= 0 (got {n}).")
    value = math.prod(
        (
            Fraction(factorial(6 * j - 2) * factorial(2 * j - 1), factorial(4 * j - 1) * factorial(4 * j - 2))
            for j in range(1, n + 1)
        ),
        start=Fraction(1, 2**n),
    )
    return exact_int(value, f"A_V({2 * n + 1})")


@cache_data()
def refined_vsasm(n: int, i: int) -> int:
    """A_V(2n+1, i): (2n+1) x (2n+1) VSASMs whose second row starts with a 1 in column i."""

    if n < 1:
        raise ValueError(f"A_V(2n+1, i) needs n >= 1 (got {n}).")
    if not 1 <= i <= n:
        raise ValueError(f"Column index i must lie in 1..{n} (got {i}).")
    value = Fraction(
        binom(2 * n + i - 2, 2 * n - 1) * binom(4 * n - i - 1, 2 * n - 1) * vsasm_total(n - 1),
        binom(4 * n - 2, 2 * n - 1),
    )
    return exact_int(value, f"A_V({2 * n + 1}, {i})")
