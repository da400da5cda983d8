"""`verify`: run one exact sweep and report every case."""

from __future__ import annotations

from typing import Dict

from backend.enumeration.backtrack import EnumBudget
from backend.results.run_report import RunReport
from backend.verification.suites import SUITES, run_suite


def suite_names() -> list[str]:
    return list(SUITES)


def cmd_verify(
    suite: str,
    bounds: Dict[str, int] | None = None,
    workers: int = 1,
    budget: EnumBudget | None = None,
) -> RunReport:
    return run_suite(suite, bounds=bounds, workers=workers, budget=budget)
