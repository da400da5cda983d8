"""`count`: A_lambda(n) for one partition.

Methods:
- backtrack / rowdp: direct enumeration
- decompose: left part by closed form, right part enumerated
- formula-auto: hook or staircase closed form, picked from the shape
"""

from __future__ import annotations

from typing import Optional, Tuple

from backend.core.config_manager import get_config
from backend.core.error_handler import ShapeError
from backend.enumeration.backtrack import EnumBudget
from backend.enumeration.enumeration_service import Engine, count_partition
from backend.formulas.decomposition import decompose_count
from backend.formulas.hook_formulas import hook_sum_refined
from backend.formulas.staircase_formulas import staircase_sum
from backend.lattice.partition import Partition
from backend.results.run_report import RunReport


METHODS = ("backtrack", "rowdp", "decompose", "formula-auto")


def default_method(lam: Partition) -> str:
    return "rowdp" if lam.width <= get_config().rowdp_max_cols else "backtrack"


def detect_shape(lam: Partition) -> Optional[Tuple[str, int, int]]:
    """("hook", m, d), ("staircase", lambda_1 - d, d), or None. Hooks win ties."""

    d = lam.parts[-1]
    if lam.is_hook():
        return "hook", lam.lambda1 - d, d
    if lam.is_staircase():
        return "staircase", lam.lambda1 - d, d
    return None


def _formula_count(lam: Partition, report: RunReport) -> int:
    shape = detect_shape(lam)
    if shape is None:
        raise ShapeError(
            f"Partition {lam} is neither a hook (m+d, d, ..., d) nor a staircase "
            f"(lambda_1+d, n-2+d, ..., d); use backtrack, rowdp or decompose."
        )
    kind, head, d = shape
    report.add_result("shape", kind)
    report.add_result("shift d", d)
    if kind == "hook":
        return hook_sum_refined(lam.n, head)
    return staircase_sum(lam.n, head)


def cmd_count(
    lam: Partition,
    method: str | None = None,
    workers: int = 1,
    budget: EnumBudget | None = None,
) -> RunReport:
    method = method or default_method(lam)
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}; choose one of {', '.join(METHODS)}.")

    report = RunReport(command="count", inputs={"partition": str(lam), "method": method, "n": lam.n})
    if budget is not None and not budget.is_unlimited and method != "backtrack":
        report.warn(f"Node budget ignored: only the backtrack engine honours it, method is {method}.")

    if method == "formula-auto":
        value = _formula_count(lam, report)
    elif method == "decompose":
        value = decompose_count(lam)
    else:
        value = count_partition(lam, method=Engine(method), budget=budget, workers=workers)

    report.add_result("A_lambda", value)
    return report.finish()
