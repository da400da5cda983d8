"""Hook shapes lambda = (m+d, d, ..., d).

Two exact evaluations of A_lambda(n), both independent of d:
- `hook_sum_refined`: sum over the refined ASM numbers, a polynomial in m for fixed n;
- `hook_sum_m`: A(n) times a finite sum in k, a rational function of n for fixed m.
"""

from __future__ import annotations

import math
from fractions import Fraction

from backend.core.cache import factorial
from backend.formulas.asm_formulas import asm_total
from backend.formulas.binomial import binom, exact_int


def _check(n: int, m: int) -> None:
    if n < 1 or m < 0:
        raise ValueError(f"Hook formulas need n >= 1 and m >= 0 (got n={n}, m={m}).")


def hook_sum_refined(n: int, m: int) -> int:
    """A(n) / C(3n-2, n-1) * sum_j C(m+j-1, m) C(n+j-2, n-1) C(2n-1-j, n-1)."""

    _check(n, m)
    total = sum(
        binom(m + j - 1, m) * binom(n + j - 2, n - 1) * binom(2 * n - 1 - j, n - 1)
        for j in range(1, n + 1)
    )
    return exact_int(Fraction(asm_total(n) * total, binom(3 * n - 2, n - 1)), f"hook A_({m},0..)({n})")


def hook_factor(n: int, m: int) -> Fraction:
    """R_m(n) = sum_k C(m,k) / k! * (n-k)...(n+k-1) / ((2n)...(2n+k-1))."""

    _check(n, m)
    total = Fraction(0)
    for k in range(m + 1):
        rising = math.prod(range(n - k, n + k))
        denominator = factorial(k) * math.prod(range(2 * n, 2 * n + k))
        total += Fraction(binom(m, k) * rising, denominator)
    return total


def hook_sum_m(n: int, m: int) -> int:
    """A(n) * R_m(n)."""

    return exact_int(asm_total(n) * hook_factor(n, m), f"hook A_({m},0..)({n}) via R_m")
