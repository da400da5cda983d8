"""Turn run reports into tables.

Data flow:
RunReport -> pandas DataFrame -> markdown (tabulate) | csv | json | latex (jinja2)

Values are rendered as exact strings before they reach pandas so big integers and
rationals never pass through floats.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List

import pandas as pd

from backend.results.run_report import RunReport, display, jsonable


FORMATS = ("markdown", "csv", "json", "latex")


# Results of these kinds print as their own block instead of a table row.
BLOCK_KINDS = ("table", "grid", "state")


def results_frame(report: RunReport) -> pd.DataFrame:
    rows = [
        {"name": r.name, "kind": r.kind, "value": display(r.value)}
        for r in report.results
        if r.kind not in BLOCK_KINDS
    ]
    return pd.DataFrame(rows, columns=["name", "kind", "value"])


def checks_frame(report: RunReport) -> pd.DataFrame:
    rows = [
        {
            "name": c.name,
            "expected": display(c.expected),
            "actual": display(c.actual),
            "pass": "yes" if c.passed else "NO",
        }
        for c in report.checks
    ]
    return pd.DataFrame(rows, columns=["name", "expected", "actual", "pass"])


def rows_frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    """Frame from plain row dicts, every cell rendered exactly."""

    return pd.DataFrame([{k: display(v) for k, v in row.items()} for row in rows])


def render_frame(df: pd.DataFrame, fmt: str = "markdown") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"Unknown table format {fmt!r}; choose one of {', '.join(FORMATS)}.")
    if fmt == "markdown":
        return df.to_markdown(index=False)
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "json":
        return json.dumps(df.to_dict(orient="records"), indent=2)
    return df.to_latex(index=False)


def render_report(report: RunReport, fmt: str = "markdown", meta: bool = True) -> str:
    """Text form of a report: results, checks, warnings and a one-line verdict."""

    parts: List[str] = [f"# {report.command}"]
    if report.inputs:
        parts.append(", ".join(f"{k}={display(v)}" for k, v in report.inputs.items()))

    scalar = results_frame(report)
    if not scalar.empty:
        parts.append(render_frame(scalar, fmt))
    for result in report.results:
        if result.kind == "table":
            parts.append(render_frame(rows_frame(result.value), fmt))
        elif result.kind == "grid":
            parts.append(str(result.value))
        elif result.kind == "state":
            parts.append(json.dumps(jsonable(result.value), sort_keys=True, indent=2))
    if report.checks:
        parts.append(render_frame(checks_frame(report), fmt))
    for warning in report.warnings:
        parts.append(f"warning: {warning}")

    if report.checks:
        failed = len(report.failed_checks)
        verdict = "all checks passed" if failed == 0 else f"{failed} of {len(report.checks)} checks FAILED"
        timing = f" ({report.elapsed_ms} ms)" if meta else ""
        parts.append(f"{len(report.checks)} checks, {verdict}{timing}")
    return "\n\n".join(parts)
