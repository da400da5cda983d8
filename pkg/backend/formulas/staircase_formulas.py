"""Staircases lambda = (lambda_1+d, n-2+d, ..., 1+d, d) with lambda_1 >= n-1."""

from __future__ import annotations

from fractions import Fraction

from backend.formulas.binomial import binom, exact_int
from backend.formulas.vsasm_formulas import refined_vsasm, vsasm_total


def staircase_sum(n: int, lambda1: int) -> int:
    """A_V(2n-1) / C(4n-2, 2n-1) * sum_j C(l1+1-j, l1+1-n) C(2n+j-2, 2n-1) C(4n-j-1, 2n-1)."""

    if n < 1:
        raise ValueError(f"Staircase sum needs n >= 1 (got {n}).")
    if lambda1 < n - 1:
        raise ValueError(f"Staircase sum needs lambda_1 >= n-1 (got lambda_1={lambda1}, n={n}).")

    total = sum(
        binom(lambda1 + 1 - j, lambda1 + 1 - n)
        * binom(2 * n + j - 2, 2 * n - 1)
        * binom(4 * n - j - 1, 2 * n - 1)
        for j in range(1, n + 1)
    )
    value = Fraction(vsasm_total(n - 1) * total, binom(4 * n - 2, 2 * n - 1))
    return exact_int(value, f"staircase A_lambda({n}) at lambda_1={lambda1}")


def staircase_sum_lemma(n: int, m: int) -> int:
    """sum_i C(m+n-i, m) A_V(2n+1, i), the staircase count with lambda_1 = n-1+m."""

    if n < 1 or m < 0:
        raise ValueError(f"Staircase sum needs n >= 1 and m >= 0 (got n={n}, m={m}).")
    return sum(binom(m + n - i, m) * refined_vsasm(n, i) for i in range(1, n + 1))
