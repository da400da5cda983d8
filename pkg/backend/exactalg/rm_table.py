"""The hook factor R_m(n) as a rational function of n.

For a hook lambda = (m+d, d, ..., d), A_lambda(n) = A(n) * R_m(n) with

    R_m(n) = sum_{k=0}^{m} C(m, k) / k! * (n-k)(n-k+1)...(n+k-1) / ((2n)(2n+1)...(2n+k-1)).

Every term is brought over the common denominator (2n)(2n+1)...(2n+m-1) and the result is
reduced, after which the numerator has degree 2m - floor((m+1)/2) and the denominator
m - floor((m+1)/2).
"""

from __future__ import annotations

from typing import Dict, Tuple

import sympy as sp
from sympy import QQ, Poly

from backend.core.cache import cache_data, factorial
from backend.core.error_handler import IntegralityError
from backend.exactalg.poly import N, RatFunc, linear
from backend.formulas.binomial import binom


# Printed reference forms for m <= 5.
PRINTED_RM: Dict[int, str] = {
    0: "1",
    1: "(n + 1)/2",
    2: "(n**3 + 6*n**2 + 3*n + 2)/(4*(2*n + 1))",
    3: "(n**4 + 14*n**3 + 35*n**2 + 10*n + 12)/(24*(2*n + 1))",
    # Printed with 456*n**3, which is not integral at n = 1.
    4: "(n**6 + 27*n**5 + 199*n**4 + 465*n**3 + 448*n**2 + 156*n + 144)/(96*(4*n**2 + 8*n + 3))",
    5: (
        "(n**7 + 42*n**6 + 542*n**5 + 2540*n**4 + 4569*n**3 + 4138*n**2 + 1128*n + 1440)"
        "/(960*(4*n**2 + 8*n + 3))"
    ),
}


def expected_degrees(m: int) -> Tuple[int, int]:
    half = (m + 1) // 2
    return 2 * m - half, m - half


def _product(factors) -> Poly:
    out = Poly(1, N, domain=QQ)
    for f in factors:
        out *= f
    return out


@cache_data(maxsize=64)
def build_rm_ratfunc(m: int) -> RatFunc:
    """R_m reduced, without the degree assertion."""

    if m < 0:
        raise ValueError(f"R_m needs m >= 0 (got m={m}).")

    den = _product(linear(N, t, 2) for t in range(m))
    num = Poly(0, N, domain=QQ)
    for k in range(m + 1):
        rising = _product(linear(N, s) for s in range(-k, k))
        rest = _product(linear(N, t, 2) for t in range(k, m))
        num += rising * rest * sp.Rational(binom(m, k), factorial(k))
    return RatFunc(num, den)


def rm_ratfunc(m: int) -> RatFunc:
    value = build_rm_ratfunc(m)
    if (value.num_degree, value.den_degree) != expected_degrees(m):
        raise IntegralityError(
            f"R_{m} has degrees {(value.num_degree, value.den_degree)}, expected {expected_degrees(m)}."
        )
    return value


def printed_rm(m: int) -> RatFunc:
    if m not in PRINTED_RM:
        raise ValueError(f"No printed R_m for m={m}; printed rows cover m = 0..{max(PRINTED_RM)}.")
    return RatFunc.from_expr(sp.sympify(PRINTED_RM[m], locals={"n": N}), N)


def matches_printed_rm(m: int) -> bool:
    """Cross-multiplied comparison of the constructed R_m with its printed form."""

    return rm_ratfunc(m).cross_equal(printed_rm(m))
