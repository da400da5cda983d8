"""Row-transfer dynamic program.

The vertical edges crossing a horizontal cut are stored as a bitmask (bit k = column k,
1 = Up). One row transition maps a top mask to every bottom mask the ice rule allows,
given the row's left and right boundary arrows. Multiplicities are accumulated in plain
Python integers, so counts are exact from the first addition.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Tuple

from backend.core.config_manager import get_config
from backend.core.error_handler import CapacityError
from backend.core.logger import get_logger
from backend.lattice.boundary import BoundaryFamily, BoundarySpec


def _mask(bits: Tuple[int, ...]) -> int:
    return sum(1 << k for k, b in enumerate(bits) if b)


@lru_cache(maxsize=1 << 16)
def row_transitions(top: int, left: int, right: int, cols: int) -> Tuple[int, ...]:
    """All bottom masks reachable from `top` through one lattice row.

    Scans the row left to right carrying the horizontal arrow; since that arrow is
    determined by the vertical edges seen so far, each bottom mask appears at most once.
    """

    partial = [(0, left)]
    for k in range(cols):
        t = (top >> k) & 1
        step = []
        for bottom, h in partial:
            for b in (0, 1):
                nxt = b + h - t
                if nxt in (0, 1):
                    step.append((bottom | (b << k), nxt))
        partial = step
    return tuple(sorted(bottom for bottom, h in partial if h == right))


def count_rowdp(spec: BoundarySpec) -> int:
    """Exact number of states of `spec` by sweeping cuts from top to bottom."""

    cfg = get_config()
    logger = get_logger()

    if spec.cols > cfg.rowdp_max_cols:
        raise CapacityError(
            f"Row DP handles at most {cfg.rowdp_max_cols} columns (lattice has {spec.cols})."
        )
    if not spec.feasible:
        return 0

    # The n - r flux law is only used for the partition family, where it is a theorem.
    prune = spec.family is BoundaryFamily.PARTITION

    layer: Dict[int, int] = {_mask(spec.top): 1}
    for i in range(spec.rows):
        nxt: Dict[int, int] = defaultdict(int)
        for top, mult in layer.items():
            for bottom in row_transitions(top, spec.left[i], spec.right[i], spec.cols):
                nxt[bottom] += mult
        if prune:
            ups = spec.rows - (i + 1)
            nxt = {mask: mult for mask, mult in nxt.items() if mask.bit_count() == ups}
        layer = dict(nxt)
        logger.debug("rowdp cut %d: %d configurations", i + 1, len(layer))

    return layer.get(_mask(spec.bottom), 0)
