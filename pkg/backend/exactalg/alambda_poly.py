"""A_lambda(n) as a polynomial in lambda_1 with lambda_2, ..., lambda_n held fixed.

Goal:
- Build the polynomial exactly from the left/right split:
  A_lambda(n) = sum_j B_j(lambda_1) * R(lambda, j),
  where B_j(x) = (x - lambda_2 + 1)(x - lambda_2 + 2)...(x - lambda_2 + j - 1) / (j-1)!
  and R(lambda, j) is enumerated (it never depends on lambda_1).
- Offer an independent construction by interpolating enumerated counts, so the two can be
  compared coefficient by coefficient.

Beginner note:
B_j is the binomial C(lambda_1 - lambda_2 + j - 1, j - 1) written as a polynomial, so the
sum has degree n - 1 with leading coefficient R(lambda, n) / (n-1)!.
"""

from __future__ import annotations

from typing import Sequence, Tuple

import sympy as sp
from sympy import QQ, Poly

from backend.core.cache import factorial
from backend.core.error_handler import IntegralityError
from backend.core.logger import get_logger
from backend.enumeration.enumeration_service import Engine, count_R, count_partition
from backend.exactalg.interpolation import interpolate
from backend.exactalg.poly import LAMBDA1, M, degree, linear
from backend.formulas.asm_formulas import refined_asm
from backend.lattice.partition import Partition


def _tail_partition(tail: Sequence[int], n: int) -> Tuple[Partition, int]:
    if n < 2:
        raise ValueError(f"The lambda_1 polynomial needs n >= 2 (got n={n}).")
    tail = tuple(int(t) for t in tail)
    if len(tail) != n - 1:
        raise ValueError(f"The tail must hold lambda_2..lambda_n, i.e. {n - 1} parts (got {len(tail)}).")
    # lambda_1 = lambda_2 is the smallest admissible head; R does not depend on it.
    lam = Partition((tail[0],) + tail)
    return lam, tail[0]


def binomial_basis(var: sp.Symbol, shift: int, j: int) -> Poly:
    """prod_{t=1}^{j-1} (var + shift + t) / (j-1)!."""

    basis = Poly(1, var, domain=QQ)
    for t in range(1, j):
        basis *= linear(var, shift + t)
    return basis * sp.Rational(1, factorial(j - 1))


def _assert_degree(poly: Poly, expected: int, what: str) -> Poly:
    if degree(poly) != expected:
        raise IntegralityError(f"{what} has degree {degree(poly)}, expected {expected}.")
    return poly


def a_lambda_poly(tail: Sequence[int], n: int, method: Engine | str = Engine.AUTO) -> Poly:
    """The exact polynomial p with p(lambda_1) = A_lambda(n) for every lambda_1 >= lambda_2."""

    lam, lambda2 = _tail_partition(tail, n)
    total = Poly(0, LAMBDA1, domain=QQ)
    for j in range(1, n + 1):
        total += binomial_basis(LAMBDA1, -lambda2, j) * count_R(lam, j, method)

    get_logger().debug("a_lambda_poly tail=%s n=%s -> %s", lam.tail, n, total.as_expr())
    return _assert_degree(total, n - 1, f"A_lambda polynomial for tail {lam.tail}")


def interpolated_alambda_poly(tail: Sequence[int], n: int, method: Engine | str = Engine.AUTO) -> Poly:
    """Same polynomial, interpolated from count_partition at lambda_1 = lambda_2 .. lambda_2+n-1."""

    lam, lambda2 = _tail_partition(tail, n)
    points = [
        (x, count_partition(lam.with_lambda1(x), method=method))
        for x in range(lambda2, lambda2 + n)
    ]
    return interpolate(points, LAMBDA1)


def hook_poly_in_m(n: int) -> Poly:
    """A_(m,0,...,0)(n) as a polynomial in m: sum_j C(m+j-1, m) A(n, j)."""

    if n < 1:
        raise ValueError(f"Hook polynomial needs n >= 1 (got n={n}).")
    total = Poly(0, M, domain=QQ)
    for j in range(1, n + 1):
        total += binomial_basis(M, 0, j) * refined_asm(n, j)
    return _assert_degree(total, n - 1, f"hook polynomial for n={n}")
