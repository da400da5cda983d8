"""State <-> alternating sign matrix correspondence for domain-wall boundaries.

A c1 vertex (horizontal arrows in, vertical arrows out) becomes +1, a c2 vertex
(vertical in, horizontal out) becomes -1, every other vertex 0.
"""

from __future__ import annotations

from typing import List, Sequence

from backend.lattice.boundary import boundary_dwbc
from backend.lattice.grid_state import GridState, VertexState, vertex_kind


def state_to_asm(state: GridState) -> List[List[int]]:
    spec = state.spec
    if spec.rows != spec.cols:
        raise ValueError(f"ASM conversion needs a square lattice (got {spec.rows}x{spec.cols}).")

    dwbc = boundary_dwbc(spec.rows)
    if (spec.top, spec.bottom, spec.left, spec.right) != (dwbc.top, dwbc.bottom, dwbc.left, dwbc.right):
        raise ValueError("ASM conversion needs domain-wall boundary conditions.")

    matrix: List[List[int]] = []
    for i in range(spec.rows):
        row: List[int] = []
        for k in range(spec.cols):
            kind = vertex_kind(state, i, k)
            if kind is None:
                raise ValueError(f"State breaks the ice rule at vertex ({i}, {k}).")
            row.append(1 if kind is VertexState.C1 else -1 if kind is VertexState.C2 else 0)
        matrix.append(row)
    return matrix


def _alternates(line: Sequence[int]) -> bool:
    nonzero = [v for v in line if v != 0]
    if not nonzero or nonzero[0] != 1 or nonzero[-1] != 1:
        return False
    return all(a == -b for a, b in zip(nonzero, nonzero[1:]))


def is_alternating_sign_matrix(matrix: Sequence[Sequence[int]]) -> bool:
    """Square, entries in {-1, 0, 1}, every row and column sums to 1 with alternating signs."""

    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        return False
    if any(v not in (-1, 0, 1) for row in matrix for v in row):
        return False
    columns = [[matrix[i][k] for i in range(n)] for k in range(n)]
    return all(_alternates(line) for line in list(matrix) + columns)
