"""`table`: closed-form tables.

Kinds:
- rm: R_m(n) as reduced rational functions
- hooks: A_(m,0,...,0)(n) for n, m
- staircase: staircase counts for n and lambda_1 = n-1+m
- refined-asm / refined-vsasm: refined counts by column
- totals: A(n) and A_V(2n+1)
"""

from __future__ import annotations

from typing import Any, Callable, Dict, List

from backend.exactalg.rm_table import rm_ratfunc
from backend.formulas.asm_formulas import asm_total, refined_asm
from backend.formulas.hook_formulas import hook_sum_m
from backend.formulas.staircase_formulas import staircase_sum
from backend.formulas.vsasm_formulas import refined_vsasm, vsasm_total
from backend.results.run_report import RunReport


Row = Dict[str, Any]


def _rm_rows(n_max: int, m_max: int) -> List[Row]:
    rows = []
    for m in range(m_max + 1):
        value = rm_ratfunc(m)
        rows.append({"m": m, "R_m(n)": value, "deg num": value.num_degree, "deg den": value.den_degree})
    return rows


def _hook_rows(n_max: int, m_max: int) -> List[Row]:
    return [{"n": n, **{f"m={m}": hook_sum_m(n, m) for m in range(m_max + 1)}} for n in range(1, n_max + 1)]


def _staircase_rows(n_max: int, m_max: int) -> List[Row]:
    return [
        {"n": n, **{f"lambda1=n-1+{m}": staircase_sum(n, n - 1 + m) for m in range(m_max + 1)}}
        for n in range(1, n_max + 1)
    ]


def _refined_rows(fn: Callable[[int, int], int], label: str) -> Callable[[int, int], List[Row]]:
    def _rows(n_max: int, m_max: int) -> List[Row]:
        return [
            {"n": n, **{f"{label}={k}": (fn(n, k) if k <= n else "") for k in range(1, n_max + 1)}}
            for n in range(1, n_max + 1)
        ]

    return _rows


def _total_rows(n_max: int, m_max: int) -> List[Row]:
    return [{"n": n, "A(n)": asm_total(n), "A_V(2n+1)": vsasm_total(n)} for n in range(1, n_max + 1)]


TABLES: Dict[str, Callable[[int, int], List[Row]]] = {
    "rm": _rm_rows,
    "hooks": _hook_rows,
    "staircase": _staircase_rows,
    "refined-asm": _refined_rows(refined_asm, "j"),
    "refined-vsasm": _refined_rows(refined_vsasm, "i"),
    "totals": _total_rows,
}


def cmd_table(kind: str = "rm", n_max: int = 8, m_max: int = 5) -> RunReport:
    if kind not in TABLES:
        raise ValueError(f"Unknown table {kind!r}; choose one of {', '.join(TABLES)}.")
    report = RunReport(command="table", inputs={"kind": kind, "n_max": n_max, "m_max": m_max})
    report.add_result(kind, TABLES[kind](n_max, m_max), kind="table")
    return report.finish()
