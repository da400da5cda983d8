"""`render`: draw the index-th state of a partition lattice."""

from __future__ import annotations

from itertools import islice

from backend.enumeration.backtrack import EnumBudget, enumerate_states
from backend.enumeration.enumeration_service import count_spec
from backend.lattice.boundary import boundary_from_partition
from backend.lattice.grid_state import validate_state
from backend.lattice.partition import Partition
from backend.lattice.serializer import state_to_dict
from backend.results.run_report import RunReport
from ui.style import render_grid


def cmd_render(lam: Partition, index: int, budget: EnumBudget | None = None) -> RunReport:
    if index < 0:
        raise ValueError(f"State index must be nonnegative (got {index}).")

    spec = boundary_from_partition(lam)
    report = RunReport(command="render", inputs={"partition": str(lam), "index": index})

    state = next(islice(enumerate_states(spec, budget), index, None), None)
    if state is None:
        total = count_spec(spec)
        raise ValueError(f"State index {index} is out of range: A_{lam} has {total} states (0..{total - 1}).")

    report.add_result("grid", render_grid(state), kind="grid")
    report.add_result("state", state_to_dict(state), kind="state")
    report.add_check("state obeys the ice rule and boundary", True, validate_state(state))
    return report.finish()
