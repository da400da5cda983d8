"""Run reports.

Every CLI command fills one RunReport:
- results: named values (counts, polynomials, rational functions, flags, states)
- checks: expected vs actual, compared exactly
- warnings: cases that were skipped (capacity, budget) or facts worth flagging

JSON shape (keys sorted so identical runs give identical bytes):
{command, inputs, results: [{name, kind, value}], checks: [{name, expected, actual, pass}],
 warnings, elapsed_ms, created_at}

`elapsed_ms` and `created_at` are metadata and are dropped with `meta=False`.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, List

from sympy import Poly

from backend.core.error_handler import EXIT_CHECK_FAILED, EXIT_OK
from backend.exactalg.poly import RatFunc, coefficients, poly_to_dict, render_poly


def jsonable(value: Any) -> Any:
    """Convert exact values to JSON-ready data without losing precision."""

    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, RatFunc):
        return {"text": value.render(), **value.to_dict()}
    if isinstance(value, Poly):
        return {"text": render_poly(value), **poly_to_dict(value)}
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def kind_of(value: Any) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "count"
    if isinstance(value, Fraction):
        return "rational"
    if isinstance(value, RatFunc):
        return "ratfunc"
    if isinstance(value, Poly):
        return "poly"
    if isinstance(value, (list, tuple)):
        return "list"
    return "text"


def display(value: Any) -> str:
    """Short human-readable form, used by the text tables."""

    if isinstance(value, RatFunc):
        return value.render()
    if isinstance(value, Poly):
        return render_poly(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(display(v) for v in value) + "]"
    return str(value)


@dataclass
class NamedResult:
    name: str
    kind: str
    value: Any

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "kind": self.kind, "value": jsonable(self.value)}


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        if isinstance(self.expected, Poly) and isinstance(self.actual, Poly):
            return coefficients(self.expected) == coefficients(self.actual)
        return self.expected == self.actual

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "expected": jsonable(self.expected),
            "actual": jsonable(self.actual),
            "pass": self.passed,
        }


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: List[NamedResult] = field(default_factory=list)
    checks: List[Check] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    finished: float | None = None

    def add_result(self, name: str, value: Any, kind: str | None = None) -> NamedResult:
        result = NamedResult(name=name, kind=kind or kind_of(value), value=value)
        self.results.append(result)
        return result

    def add_check(self, name: str, expected: Any, actual: Any) -> Check:
        check = Check(name=name, expected=expected, actual=actual)
        self.checks.append(check)
        return check

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def finish(self) -> "RunReport":
        if self.finished is None:
            self.finished = time.perf_counter()
        return self

    @property
    def elapsed_ms(self) -> int:
        end = self.finished if self.finished is not None else time.perf_counter()
        return int(round((end - self.started) * 1000))

    @property
    def failed_checks(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failed_checks

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.all_passed else EXIT_CHECK_FAILED

    def to_dict(self, meta: bool = True) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "results": [r.to_dict() for r in self.results],
            "checks": [c.to_dict() for c in self.checks],
            "warnings": list(self.warnings),
        }
        if meta:
            payload["elapsed_ms"] = self.elapsed_ms
            payload["created_at"] = datetime.now(timezone.utc).isoformat()
        return payload

    def to_json(self, meta: bool = True) -> str:
        return json.dumps(self.to_dict(meta=meta), sort_keys=True, indent=2)

    def summary(self) -> Dict[str, Any]:
        """Compact dict for the audit log."""

        return {
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "checks": len(self.checks),
            "failed": len(self.failed_checks),
            "warnings": len(self.warnings),
            "elapsed_ms": self.elapsed_ms,
        }
