"""Complete arrow assignments (states) and the ice rule."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from backend.core.error_handler import DimensionMismatchError
from backend.lattice.boundary import BoundarySpec


Matrix = Tuple[Tuple[int, ...], ...]


class VertexState(str, Enum):
    """The six two-in/two-out vertex configurations.

    a: both lines pass straight through with the same orientation pattern,
    b: straight through the other way,
    c: both lines turn (these are the nonzero ASM entries).
    """

    A1 = "a1"  # right, right, up, up
    A2 = "a2"  # left, left, down, down
    B1 = "b1"  # right, right, down, down
    B2 = "b2"  # left, left, up, up
    C1 = "c1"  # in from left and right, out up and down: ASM +1
    C2 = "c2"  # in from top and bottom, out left and right: ASM -1


# (left, right, top, bottom) bits -> vertex state
_VERTEX_TABLE = {
    (1, 1, 1, 1): VertexState.A1,
    (0, 0, 0, 0): VertexState.A2,
    (1, 1, 0, 0): VertexState.B1,
    (0, 0, 1, 1): VertexState.B2,
    (1, 0, 1, 0): VertexState.C1,
    (0, 1, 0, 1): VertexState.C2,
}


def _freeze(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class GridState:
    """Full edge matrices for an r x c lattice.

    vertical: (r+1) x c, row 0 is the top boundary, row r the bottom boundary.
    horizontal: r x (c+1), column 0 is the left boundary, column c the right boundary.
    """

    spec: BoundarySpec
    vertical: Matrix
    horizontal: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertical", _freeze(self.vertical))
        object.__setattr__(self, "horizontal", _freeze(self.horizontal))

    @property
    def rows(self) -> int:
        return self.spec.rows

    @property
    def cols(self) -> int:
        return self.spec.cols

    def vertex_bits(self, i: int, k: int) -> Tuple[int, int, int, int]:
        """(left, right, top, bottom) edge bits around vertex (i, k)."""

        return (
            self.horizontal[i][k],
            self.horizontal[i][k + 1],
            self.vertical[i][k],
            self.vertical[i + 1][k],
        )


def _check_dimensions(state: GridState) -> None:
    r, c = state.rows, state.cols
    v, h = state.vertical, state.horizontal
    if len(v) != r + 1 or any(len(row) != c for row in v):
        raise DimensionMismatchError(f"Vertical edges must form a {r + 1}x{c} matrix.")
    if len(h) != r or any(len(row) != c + 1 for row in h):
        raise DimensionMismatchError(f"Horizontal edges must form a {r}x{c + 1} matrix.")


def vertex_kind(state: GridState, i: int, k: int) -> Optional[VertexState]:
    """Vertex state at (i, k), or None when the ice rule fails there."""

    return _VERTEX_TABLE.get(state.vertex_bits(i, k))


def validate_state(state: GridState) -> bool:
    """True iff the boundary edges match the spec and every vertex obeys the ice rule.

    Raises DimensionMismatchError when the edge matrices have the wrong shape.
    """

    _check_dimensions(state)
    spec = state.spec
    v, h = state.vertical, state.horizontal

    if v[0] != spec.top or v[spec.rows] != spec.bottom:
        return False
    if tuple(row[0] for row in h) != spec.left:
        return False
    if tuple(row[spec.cols] for row in h) != spec.right:
        return False

    return all(
        vertex_kind(state, i, k) is not None
        for i in range(spec.rows)
        for k in range(spec.cols)
    )


def cut_up_counts(state: GridState) -> List[int]:
    """Number of Up arrows on each horizontal cut, from the top boundary (cut 0) down."""

    return [sum(row) for row in state.vertical]
