"""Alternating sign matrix counts: the product formula and its refinement by the
position of the 1 in the first row."""

from __future__ import annotations

import math
from fractions import Fraction

from backend.core.cache import cache_data, factorial
from backend.formulas.binomial import binom, exact_int


@cache_data()
def asm_total(n: int) -> int:
    """A(n) = prod_{j=0}^{n-1} (3j+1)! / (n+j)!."""

    if n < 1:
        raise ValueError(f"A(n) needs n >= 1 (got {n}).")
    value = math.prod(
        (Fraction(factorial(3 * j + 1), factorial(n + j)) for j in range(n)),
        start=Fraction(1),
    )
    return exact_int(value, f"A({n})")


@cache_data()
def refined_asm(n: int, j: int) -> int:
    """A(n, j): n x n ASMs whose first-row 1 is in column j."""

    if n < 1:
        raise ValueError(f"A(n, j) needs n >= 1 (got {n}).")
    if not 1 <= j <= n:
        raise ValueError(f"Column index j must lie in 1..{n} (got {j}).")
    value = Fraction(
        asm_total(n) * binom(n + j - 2, n - 1) * binom(2 * n - 1 - j, n - 1),
        binom(3 * n - 2, n - 1),
    )
    return exact_int(value, f"A({n}, {j})")
