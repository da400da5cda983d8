"""JSON forms of states and ASMs.

State schema:
    {rows, cols, top, bottom, left, right, vertical, horizontal}
Sides are arrow strings ("U"/"D" on top and bottom, "L"/"R" on left and right);
`vertical` is a list of r+1 "U/D" strings, `horizontal` a list of r "L/R" strings.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence

from backend.core.error_handler import DimensionMismatchError
from backend.lattice.boundary import Arrow, BoundaryFamily, BoundarySpec
from backend.lattice.grid_state import GridState


def _vertical_row(bits: Sequence[int]) -> str:
    return "".join(Arrow.vertical(b).value for b in bits)


def _horizontal_row(bits: Sequence[int]) -> str:
    return "".join(Arrow.horizontal(b).value for b in bits)


def state_to_dict(state: GridState) -> Dict[str, Any]:
    spec = state.spec
    return {
        "rows": spec.rows,
        "cols": spec.cols,
        "top": spec.arrows("top"),
        "bottom": spec.arrows("bottom"),
        "left": spec.arrows("left"),
        "right": spec.arrows("right"),
        "vertical": [_vertical_row(row) for row in state.vertical],
        "horizontal": [_horizontal_row(row) for row in state.horizontal],
    }


def state_to_json(state: GridState) -> str:
    return json.dumps(state_to_dict(state), sort_keys=True)


def _parse_row(text: str, allowed: str) -> List[int]:
    if any(ch not in allowed for ch in text):
        raise ValueError(f"Edge row {text!r} may only contain {allowed!r}.")
    return [Arrow(ch).bit for ch in text]


def state_from_dict(payload: Dict[str, Any], family: BoundaryFamily = BoundaryFamily.GENERIC) -> GridState:
    try:
        spec = BoundarySpec.from_arrows(
            top=payload["top"],
            bottom=payload["bottom"],
            left=payload["left"],
            right=payload["right"],
            family=family,
        )
        vertical = [_parse_row(row, "UD") for row in payload["vertical"]]
        horizontal = [_parse_row(row, "LR") for row in payload["horizontal"]]
    except KeyError as exc:
        raise ValueError(f"State JSON is missing field {exc}.") from exc

    if (payload.get("rows"), payload.get("cols")) != (spec.rows, spec.cols):
        raise DimensionMismatchError("Declared rows/cols disagree with the boundary arrows.")
    return GridState(spec=spec, vertical=vertical, horizontal=horizontal)


def state_from_json(text: str) -> GridState:
    return state_from_dict(json.loads(text))
