"""Boundary specifications for rectangular six-vertex lattices.

Conventions used everywhere in the package:
- Rows are numbered top to bottom, starting at 0 in storage.
- Columns are stored left to right. The partition model numbers its columns 1..N from
  right to left, so label s sits at storage index N - s.
- One bit per edge: a vertical edge is 1 when its arrow points Up, a horizontal edge is 1
  when its arrow points Right.

With that encoding the ice rule at a vertex reads `bottom + left == top + right`, and
a boundary can only have states when the same balance holds over the whole boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

from backend.core.error_handler import DimensionMismatchError
from backend.core.logger import get_logger
from backend.lattice.partition import Partition


class Arrow(str, Enum):
    UP = "U"
    DOWN = "D"
    LEFT = "L"
    RIGHT = "R"

    @property
    def bit(self) -> int:
        return 1 if self in (Arrow.UP, Arrow.RIGHT) else 0

    @staticmethod
    def vertical(bit: int) -> "Arrow":
        return Arrow.UP if bit else Arrow.DOWN

    @staticmethod
    def horizontal(bit: int) -> "Arrow":
        return Arrow.RIGHT if bit else Arrow.LEFT


class BoundaryFamily(str, Enum):
    GENERIC = "generic"
    PARTITION = "partition"
    S = "S"
    T = "T"
    L = "L"
    RIGHT_PART = "right-part"
    REFINED_ASM = "refined-asm"
    REFINED_VSASM = "refined-vsasm"
    VSASM = "vsasm"


Bits = Tuple[int, ...]


def _bits(values: Iterable[int], side: str) -> Bits:
    out = tuple(int(v) for v in values)
    if any(v not in (0, 1) for v in out):
        raise ValueError(f"Boundary side '{side}' must contain only 0/1 edge bits.")
    return out


def _arrow_bits(text: str, allowed: str, side: str) -> Bits:
    text = (text or "").strip().upper()
    if any(ch not in allowed for ch in text):
        raise ValueError(f"Boundary side '{side}' accepts only {allowed!r} arrows, got {text!r}.")
    return tuple(Arrow(ch).bit for ch in text)


@dataclass(frozen=True)
class BoundarySpec:
    """Fixed arrows on all four sides of an r x c lattice."""

    rows: int
    cols: int
    top: Bits
    bottom: Bits
    left: Bits
    right: Bits
    family: BoundaryFamily = BoundaryFamily.GENERIC

    def __post_init__(self) -> None:
        if int(self.rows) < 1 or int(self.cols) < 1:
            raise ValueError(f"Lattice dimensions must be positive (got {self.rows}x{self.cols}).")

        for name in ("top", "bottom", "left", "right"):
            object.__setattr__(self, name, _bits(getattr(self, name), name))

        if len(self.top) != self.cols or len(self.bottom) != self.cols:
            raise DimensionMismatchError(
                f"Top/bottom sides need {self.cols} arrows (got {len(self.top)} and {len(self.bottom)})."
            )
        if len(self.left) != self.rows or len(self.right) != self.rows:
            raise DimensionMismatchError(
                f"Left/right sides need {self.rows} arrows (got {len(self.left)} and {len(self.right)})."
            )

        if not self.feasible:
            get_logger().warning(
                "Boundary %dx%d (%s) fails the in/out balance and has no states.",
                self.rows,
                self.cols,
                self.family.value,
            )

    @classmethod
    def from_arrows(
        cls,
        top: str,
        bottom: str,
        left: str,
        right: str,
        family: BoundaryFamily = BoundaryFamily.GENERIC,
    ) -> "BoundarySpec":
        """Build a spec from "U/D" strings (top, bottom) and "L/R" strings (left, right)."""

        top_bits = _arrow_bits(top, "UD", "top")
        left_bits = _arrow_bits(left, "LR", "left")
        return cls(
            rows=len(left_bits),
            cols=len(top_bits),
            top=top_bits,
            bottom=_arrow_bits(bottom, "UD", "bottom"),
            left=left_bits,
            right=_arrow_bits(right, "LR", "right"),
            family=family,
        )

    @property
    def balance(self) -> int:
        """(#in - #out) / 2 over the boundary; zero for every feasible spec."""

        return sum(self.bottom) + sum(self.left) - sum(self.top) - sum(self.right)

    @property
    def feasible(self) -> bool:
        return self.balance == 0

    def arrows(self, side: str) -> str:
        bits = getattr(self, side)
        to_arrow = Arrow.vertical if side in ("top", "bottom") else Arrow.horizontal
        return "".join(to_arrow(b).value for b in bits)


def _check_index(name: str, value: int, upper: int) -> None:
    if not 1 <= value <= upper:
        raise ValueError(f"{name} must lie in 1..{upper} (got {value}).")


def _one_hot(length: int, index: int, hot: int, cold: int) -> Bits:
    return tuple(hot if k == index else cold for k in range(length))


def _partition_top(lam: Partition) -> Bits:
    width = lam.width
    labels = set(lam.plus_rho)
    return tuple(1 if (width - s) in labels else 0 for s in range(width))


def boundary_from_partition(lam: Partition) -> BoundarySpec:
    """The n x (n + lambda_1) lattice whose Up top arrows sit in the columns lambda + rho."""

    n = lam.n
    width = lam.width
    return BoundarySpec(
        rows=n,
        cols=width,
        top=_partition_top(lam),
        bottom=(0,) * width,
        left=(1,) * n,
        right=(0,) * n,
        family=BoundaryFamily.PARTITION,
    )


def boundary_dwbc(n: int) -> BoundarySpec:
    """Domain-wall boundary on the n x n lattice."""

    if n < 1:
        raise ValueError("DWBC needs n >= 1.")
    return boundary_from_partition(Partition.zero(n))


def boundary_S(r: int, c: int) -> BoundarySpec:
    """Top: Up only in the leftmost column. Right: Left only in the bottom row."""

    if r < 1 or c < 1:
        raise ValueError(f"S lattice needs r, c >= 1 (got {r}, {c}).")
    return BoundarySpec(
        rows=r,
        cols=c,
        top=_one_hot(c, 0, 1, 0),
        bottom=(0,) * c,
        left=(1,) * r,
        right=_one_hot(r, r - 1, 0, 1),
        family=BoundaryFamily.S,
    )


def boundary_T(r: int, c: int) -> BoundarySpec:
    """Left: Left only in the top row. Right: Left only in the bottom row. Top/bottom Down."""

    if r < 1 or c < 1:
        raise ValueError(f"T lattice needs r, c >= 1 (got {r}, {c}).")
    return BoundarySpec(
        rows=r,
        cols=c,
        top=(0,) * c,
        bottom=(0,) * c,
        left=_one_hot(r, 0, 0, 1),
        right=_one_hot(r, r - 1, 0, 1),
        family=BoundaryFamily.T,
    )


def boundary_L(n: int, m: int, j: int) -> BoundarySpec:
    """The n x (m+1) left part with its single Left arrow on the right side in row j."""

    if n < 1 or m < 0:
        raise ValueError(f"L lattice needs n >= 1 and m >= 0 (got n={n}, m={m}).")
    _check_index("Row index j", j, n)
    return BoundarySpec(
        rows=n,
        cols=m + 1,
        top=_one_hot(m + 1, 0, 1, 0),
        bottom=(0,) * (m + 1),
        left=(1,) * n,
        right=_one_hot(n, j - 1, 0, 1),
        family=BoundaryFamily.L,
    )


def boundary_R(lam: Partition, j: int, right_cols: int | None = None) -> BoundarySpec:
    """Right part of the split lattice, with the left part's Left arrow entering in row j.

    By default the right part keeps the n + lambda_2 - 1 rightmost columns (the general
    decomposition). `right_cols` selects a different split width.
    """

    n = lam.n
    if n < 2:
        raise ValueError("The split lattice needs a partition with n >= 2 parts.")
    _check_index("Row index j", j, n)

    cols = n + lam.lambda2 - 1 if right_cols is None else int(right_cols)
    if not 1 <= cols <= lam.width - 1:
        raise ValueError(f"Right part width must lie in 1..{lam.width - 1} (got {cols}).")

    top = _partition_top(lam)[lam.width - cols:]
    return BoundarySpec(
        rows=n,
        cols=cols,
        top=top,
        bottom=(0,) * cols,
        left=_one_hot(n, j - 1, 0, 1),
        right=(0,) * n,
        family=BoundaryFamily.RIGHT_PART,
    )


def boundary_R_staircase(lam: Partition, i: int) -> BoundarySpec:
    """Right part of the staircase split: n + lambda_2 columns, so the left part
    holds lambda_1 - lambda_2 columns."""

    if lam.n >= 2 and lam.lambda1 <= lam.lambda2:
        raise ValueError("The staircase split needs lambda_1 > lambda_2.")
    return boundary_R(lam, i, right_cols=lam.n + lam.lambda2)


def boundary_refined_asm(n: int, j: int) -> BoundarySpec:
    """(n-1) x n lattice for n x n ASMs whose first-row 1 sits in column j.

    j counts right to left on the top boundary.
    """

    if n < 2:
        raise ValueError("Refined ASM lattice needs n >= 2.")
    _check_index("Column index j", j, n)
    return BoundarySpec(
        rows=n - 1,
        cols=n,
        top=_one_hot(n, n - j, 0, 1),
        bottom=(0,) * n,
        left=(1,) * (n - 1),
        right=(0,) * (n - 1),
        family=BoundaryFamily.REFINED_ASM,
    )


def boundary_refined_vsasm(n: int, i: int) -> BoundarySpec:
    """(2n-2) x n left-half lattice of (2n+1) x (2n+1) VSASMs whose second-row 1 is in column i.

    The lattice holds matrix rows 3..2n. Column i counts left to right as in the matrix.
    The right side follows the alternating middle column: Right in the top row, then Left,
    Right, ...
    """

    if n < 2:
        raise ValueError("Refined VSASM lattice needs n >= 2.")
    _check_index("Column index i", i, n)
    rows = 2 * n - 2
    return BoundarySpec(
        rows=rows,
        cols=n,
        top=_one_hot(n, i - 1, 0, 1),
        bottom=(0,) * n,
        left=(1,) * rows,
        right=tuple(1 if k % 2 == 0 else 0 for k in range(rows)),
        family=BoundaryFamily.REFINED_VSASM,
    )


def boundary_vsasm(n: int) -> BoundarySpec:
    """(2n-1) x n left-half lattice of all (2n+1) x (2n+1) VSASMs (matrix rows 2..2n)."""

    if n < 1:
        raise ValueError("VSASM lattice needs n >= 1.")
    rows = 2 * n - 1
    return BoundarySpec(
        rows=rows,
        cols=n,
        top=(1,) * n,
        bottom=(0,) * n,
        left=(1,) * rows,
        right=tuple(0 if k % 2 == 0 else 1 for k in range(rows)),
        family=BoundaryFamily.VSASM,
    )


def appended_down_column(spec: BoundarySpec) -> BoundarySpec:
    """`spec` with one more all-Down column on the right, the effect of lambda -> lambda + 1."""

    return BoundarySpec(
        rows=spec.rows,
        cols=spec.cols + 1,
        top=spec.top + (0,),
        bottom=spec.bottom + (0,),
        left=spec.left,
        right=spec.right,
        family=spec.family,
    )

