"""Counting through the split of the lattice into a left part and a right part.

The left part always has the L(m, j) closed form; the right part is enumerated.
"""

from __future__ import annotations

from backend.enumeration.enumeration_service import Engine, count_R_row, count_R_staircase
from backend.formulas.lattice_formulas import l_count
from backend.lattice.partition import Partition


def decompose_count(lam: Partition, method: Engine | str = Engine.AUTO) -> int:
    """A_lambda(n) = sum_j C(l1-l2+j-1, l1-l2) R(lambda, j)."""

    if lam.n < 2:
        raise ValueError("The decomposition needs a partition with n >= 2 parts.")
    m = lam.lambda1 - lam.lambda2
    return sum(l_count(m, j) * r for j, r in enumerate(count_R_row(lam, method), start=1))


def decompose_staircase_count(lam: Partition, method: Engine | str = Engine.AUTO) -> int:
    """A_lambda(n) through the staircase split, whose left part has l1-l2 columns."""

    if lam.n < 2:
        raise ValueError("The decomposition needs a partition with n >= 2 parts.")
    m = lam.lambda1 - lam.lambda2 - 1
    if m < 0:
        raise ValueError("The staircase split needs lambda_1 > lambda_2.")
    return sum(l_count(m, i) * count_R_staircase(lam, i, method) for i in range(1, lam.n + 1))
