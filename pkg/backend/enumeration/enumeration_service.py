"""Enumeration service (engine selection + partition-model counts).

Data flow:
CLI / formulas / exactalg -> enumeration_service -> backtrack | row_dp

Both engines are exact; `auto` prefers the row DP whenever the lattice fits in a word.
"""

from __future__ import annotations

from enum import Enum
from typing import List

from backend.core.cache import cache_data
from backend.core.config_manager import get_config
from backend.enumeration.backtrack import EnumBudget, count_backtrack
from backend.enumeration.row_dp import count_rowdp
from backend.lattice.boundary import (
    BoundarySpec,
    boundary_R,
    boundary_R_staircase,
    boundary_from_partition,
)
from backend.lattice.partition import Partition


class Engine(str, Enum):
    AUTO = "auto"
    BACKTRACK = "backtrack"
    ROWDP = "rowdp"


def resolve_engine(spec: BoundarySpec, method: Engine | str = Engine.AUTO) -> Engine:
    engine = Engine(method)
    if engine is Engine.AUTO:
        return Engine.ROWDP if spec.cols <= get_config().rowdp_max_cols else Engine.BACKTRACK
    return engine


def count_spec(
    spec: BoundarySpec,
    method: Engine | str = Engine.AUTO,
    budget: EnumBudget | None = None,
    workers: int = 1,
) -> int:
    """Count the states of any boundary spec with the selected engine."""

    engine = resolve_engine(spec, method)
    if engine is Engine.BACKTRACK:
        return count_backtrack(spec, budget=budget, workers=workers)
    return count_rowdp(spec)


def count_partition(
    lam: Partition,
    method: Engine | str = Engine.AUTO,
    budget: EnumBudget | None = None,
    workers: int = 1,
) -> int:
    """A_lambda(n): number of states of the lattice built from lambda."""

    return count_spec(boundary_from_partition(lam), method=method, budget=budget, workers=workers)


@cache_data()
def count_R(lam: Partition, j: int, method: Engine | str = Engine.AUTO) -> int:
    """R(lambda, j): states of the right part of the general split.

    Does not depend on lambda_1.
    """

    return count_spec(boundary_R(lam, j), method=method)


@cache_data()
def count_R_staircase(lam: Partition, i: int, method: Engine | str = Engine.AUTO) -> int:
    """States of the right part of the staircase split (n + lambda_2 columns)."""

    return count_spec(boundary_R_staircase(lam, i), method=method)


def count_R_row(lam: Partition, method: Engine | str = Engine.AUTO) -> List[int]:
    """[R(lambda, 1), ..., R(lambda, n)]."""

    return [count_R(lam, j, method) for j in range(1, lam.n + 1)]
