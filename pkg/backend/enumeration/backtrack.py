"""Backtracking engine.

How it works:
- Vertices are filled row-major, left to right.
- At each vertex the top and left edges are already known, so the ice rule leaves
  one or two choices for the bottom edge (the right edge follows from it).
- Choices with the bottom edge Down are tried first; a branch dies as soon as it
  disagrees with the right or bottom boundary.

The same walk counts states, streams them, or is split across worker processes
at the end of the first row.
The recursion is one frame per vertex; lattices that would outgrow the interpreter stack
raise CapacityError up front.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import Iterator, List, Optional, Tuple

from backend.core.error_handler import BudgetExceededError, CapacityError
from backend.core.logger import get_logger
from backend.lattice.boundary import BoundarySpec
from backend.lattice.grid_state import GridState


Edges = List[List[int]]

# Frames kept free for the callers of the search.
STACK_HEADROOM = 200


@dataclass(frozen=True)
class EnumBudget:
    """Optional caps on the number of states produced and search nodes visited."""

    max_states: Optional[int] = None
    max_nodes: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ("max_states", "max_nodes"):
            value = getattr(self, name)
            if value is not None and int(value) <= 0:
                raise ValueError(f"{name} must be positive when given.")

    @classmethod
    def unlimited(cls) -> "EnumBudget":
        return cls()

    @property
    def is_unlimited(self) -> bool:
        return self.max_states is None and self.max_nodes is None


def _bottom_choices(top: int, left: int) -> Tuple[int, ...]:
    if top == left:
        return (0, 1)
    # top Up + left Left forces bottom Up; top Down + left Right forces bottom Down.
    return (1,) if top else (0,)


class _Search:
    def __init__(self, spec: BoundarySpec, budget: EnumBudget) -> None:
        self.spec = spec
        self.budget = budget
        self.total = spec.rows * spec.cols
        depth = sys.getrecursionlimit() - STACK_HEADROOM
        if self.total > depth:
            raise CapacityError(
                f"Backtracking recurses once per vertex and handles at most {depth} vertices "
                f"(lattice has {self.total}); use the row DP."
            )
        self.nodes = 0
        self.states = 0

        r, c = spec.rows, spec.cols
        self.vertical: Edges = [list(spec.top)] + [[0] * c for _ in range(r - 1)] + [list(spec.bottom)]
        self.horizontal: Edges = [[spec.left[i]] + [0] * c for i in range(r)]

    def load(self, vertical: Edges, horizontal: Edges) -> None:
        self.vertical = [list(row) for row in vertical]
        self.horizontal = [list(row) for row in horizontal]

    def _tick(self) -> None:
        self.nodes += 1
        cap = self.budget.max_nodes
        if cap is not None and self.nodes > cap:
            raise BudgetExceededError(
                f"Search node budget of {cap} exceeded after {self.states} states.",
                nodes=self.nodes,
                states=self.states,
            )

    def _found(self) -> None:
        self.states += 1
        cap = self.budget.max_states
        if cap is not None and self.states > cap:
            raise BudgetExceededError(
                f"State budget of {cap} exceeded.",
                nodes=self.nodes,
                states=self.states,
            )

    def _moves(self, pos: int) -> Iterator[Tuple[int, int, int, int]]:
        """Yield (i, k, bottom, right) completions at vertex `pos` that fit the boundary."""

        spec = self.spec
        i, k = divmod(pos, spec.cols)
        top = self.vertical[i][k]
        left = self.horizontal[i][k]
        for bottom in _bottom_choices(top, left):
            right = bottom + left - top
            if k == spec.cols - 1 and right != spec.right[i]:
                continue
            if i == spec.rows - 1 and bottom != spec.bottom[k]:
                continue
            yield i, k, bottom, right

    def count(self, pos: int) -> int:
        if pos == self.total:
            self._found()
            return 1
        self._tick()
        found = 0
        for i, k, bottom, right in self._moves(pos):
            self.vertical[i + 1][k] = bottom
            self.horizontal[i][k + 1] = right
            found += self.count(pos + 1)
        return found

    def walk(self, pos: int) -> Iterator[GridState]:
        if pos == self.total:
            self._found()
            yield GridState(spec=self.spec, vertical=self.vertical, horizontal=self.horizontal)
            return
        self._tick()
        for i, k, bottom, right in self._moves(pos):
            self.vertical[i + 1][k] = bottom
            self.horizontal[i][k + 1] = right
            yield from self.walk(pos + 1)

    def frontier(self, pos: int, depth: int) -> Iterator[Tuple[Edges, Edges]]:
        """Partial assignments covering the first `depth` vertices, in search order."""

        if pos == depth:
            yield [list(row) for row in self.vertical], [list(row) for row in self.horizontal]
            return
        for i, k, bottom, right in self._moves(pos):
            self.vertical[i + 1][k] = bottom
            self.horizontal[i][k + 1] = right
            yield from self.frontier(pos + 1, depth)


def _count_subtree(spec: BoundarySpec, vertical: Edges, horizontal: Edges, depth: int) -> int:
    search = _Search(spec, EnumBudget.unlimited())
    search.load(vertical, horizontal)
    return search.count(depth)


def count_backtrack(
    spec: BoundarySpec,
    budget: EnumBudget | None = None,
    workers: int = 1,
) -> int:
    """Exact number of states of `spec` by depth-first search.

    With `workers > 1` and no budget, the subtrees hanging below the first row are
    counted in separate processes and summed. A budget forces a single sequential walk
    so that budget errors are reproducible.
    """

    logger = get_logger()
    budget = budget or EnumBudget.unlimited()

    if not spec.feasible:
        return 0

    if workers > 1 and budget.is_unlimited and spec.rows > 1:
        depth = spec.cols
        prefixes = list(_Search(spec, budget).frontier(0, depth))
        logger.debug("backtrack split: %d subtrees over %d workers", len(prefixes), workers)
        if len(prefixes) > 1:
            verticals = [p[0] for p in prefixes]
            horizontals = [p[1] for p in prefixes]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = pool.map(_count_subtree, repeat(spec), verticals, horizontals, repeat(depth))
                return sum(parts)

    search = _Search(spec, budget)
    found = search.count(0)
    logger.debug("backtrack %dx%d: %d states, %d nodes", spec.rows, spec.cols, found, search.nodes)
    return found


def enumerate_states(spec: BoundarySpec, budget: EnumBudget | None = None) -> Iterator[GridState]:
    """Yield every state of `spec` once, ordered by row-major bottom-edge bits.

    When a budget runs out the stream raises BudgetExceededError after the states
    already yielded.
    """

    if not spec.feasible:
        return
    yield from _Search(spec, budget or EnumBudget.unlimited()).walk(0)
