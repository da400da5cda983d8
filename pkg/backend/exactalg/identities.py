"""Two-sided binomial convolution identity behind the hook formula.

lhs(m, n) = sum_{k=0}^{n-1} C(m+k, m) C(-n, k) C(-n, n-1-k)
rhs(m, n) = sum_{k=0}^{m}   C(m, k)   C(-n, k) C(-2n-k, n-1-k)

The lhs also gives the hook count:
A_(m,0,...,0)(n) = (-1)^(n-1) A(n) lhs(m, n) / C(3n-2, n-1).
"""

from __future__ import annotations

from fractions import Fraction

from backend.formulas.asm_formulas import asm_total
from backend.formulas.binomial import binom, gen_binom
from backend.formulas.hook_formulas import hook_sum_refined


def _check(m: int, n: int) -> None:
    if m < 0 or n < 1:
        raise ValueError(f"Identity needs m >= 0 and n >= 1 (got m={m}, n={n}).")


def lemma13_lhs(m: int, n: int) -> Fraction:
    _check(m, n)
    return sum(
        (binom(m + k, m) * gen_binom(-n, k) * gen_binom(-n, n - 1 - k) for k in range(n)),
        start=Fraction(0),
    )


def lemma13_rhs(m: int, n: int) -> Fraction:
    _check(m, n)
    return sum(
        (binom(m, k) * gen_binom(-n, k) * gen_binom(-2 * n - k, n - 1 - k) for k in range(m + 1)),
        start=Fraction(0),
    )


def alambda_inter_value(m: int, n: int) -> Fraction:
    """(-1)^(n-1) A(n) lhs(m, n) / C(3n-2, n-1)."""

    sign = -1 if (n - 1) % 2 else 1
    return sign * asm_total(n) * lemma13_lhs(m, n) / binom(3 * n - 2, n - 1)


def check_eq_alambda_inter(m: int, n: int) -> bool:
    return alambda_inter_value(m, n) == hook_sum_refined(n, m)
