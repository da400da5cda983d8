"""ASCII drawing of lattice states.

Each lattice row prints as two lines:
- the vertical edges above it: `^` (Up) or `v` (Down) under each vertex
- the row itself: horizontal arrows `>` (Right) or `<` (Left) between `+` vertices

    ^   v
  > + < + <
"""

from __future__ import annotations

from typing import List, Sequence

from backend.lattice.grid_state import GridState


def _vertical_line(bits: Sequence[int]) -> str:
    line = [" "] * (4 * len(bits))
    for k, bit in enumerate(bits):
        line[2 + 4 * k] = "^" if bit else "v"
    return "".join(line).rstrip()


def _horizontal_line(bits: Sequence[int]) -> str:
    arrows = [">" if bit else "<" for bit in bits]
    return " + ".join(arrows)


def render_grid(state: GridState) -> str:
    lines: List[str] = []
    for i in range(state.rows):
        lines.append(_vertical_line(state.vertical[i]))
        lines.append(_horizontal_line(state.horizontal[i]))
    lines.append(_vertical_line(state.vertical[state.rows]))
    return "\n".join(lines)
