"""Verification suites.

Each suite sweeps one family of exact identities and writes one check row per case into a
RunReport. A case that does not fit the engines (row DP too wide, node budget spent) becomes
a warning row instead of a check, so nothing is skipped silently.

Data flow:
ui.verify_command -> run_suite -> formulas / exactalg / enumeration -> RunReport
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List

from backend.core.error_handler import BudgetExceededError, CapacityError
from backend.core.logger import get_logger
from backend.enumeration.backtrack import EnumBudget, count_backtrack, enumerate_states
from backend.enumeration.enumeration_service import (
    Engine,
    count_partition,
    count_R_staircase,
    count_spec,
)
from backend.exactalg.alambda_poly import a_lambda_poly, hook_poly_in_m, interpolated_alambda_poly
from backend.exactalg.identities import check_eq_alambda_inter, lemma13_lhs, lemma13_rhs
from backend.exactalg.poly import coefficients, degree, evaluate
from backend.exactalg.rm_table import PRINTED_RM, build_rm_ratfunc, expected_degrees, matches_printed_rm
from backend.formulas.asm_formulas import asm_total, refined_asm
from backend.formulas.decomposition import decompose_count, decompose_staircase_count
from backend.formulas.hook_formulas import hook_sum_m, hook_sum_refined
from backend.formulas.lattice_formulas import l_count, path_count
from backend.formulas.staircase_formulas import staircase_sum, staircase_sum_lemma
from backend.formulas.vsasm_formulas import refined_vsasm, vsasm_total
from backend.lattice.asm import is_alternating_sign_matrix, state_to_asm
from backend.lattice.boundary import (
    boundary_L,
    boundary_S,
    boundary_T,
    boundary_dwbc,
    boundary_from_partition,
    boundary_refined_asm,
    boundary_refined_vsasm,
    appended_down_column,
    boundary_vsasm,
)
from backend.lattice.grid_state import cut_up_counts, validate_state
from backend.lattice.partition import Partition, iter_partitions
from backend.lattice.serializer import state_from_json, state_to_json
from backend.results.run_report import RunReport


@dataclass(frozen=True)
class SuiteContext:
    workers: int = 1
    budget: EnumBudget = field(default_factory=EnumBudget.unlimited)


SuiteFn = Callable[..., None]


@dataclass(frozen=True)
class Suite:
    name: str
    fn: SuiteFn
    defaults: Dict[str, int]
    description: str


def _partitions(n_max: int, lambda_max: int, n_min: int = 1) -> Iterator[Partition]:
    for n in range(n_min, n_max + 1):
        yield from iter_partitions(n, lambda_max)


def _guarded(report: RunReport, name: str, fn: Callable[[], Any]) -> Any:
    """Run `fn`; on a capacity or budget error record a warning row and return None."""

    try:
        return fn()
    except (CapacityError, BudgetExceededError) as exc:
        report.warn(f"{name}: skipped ({exc})")
        get_logger().warning("verify case %s skipped: %s", name, exc)
        return None


def suite_engines(report: RunReport, ctx: SuiteContext, n_max: int, lambda_max: int) -> None:
    """Backtracking, row DP and the split formula agree on every partition."""

    for lam in _partitions(n_max, lambda_max):
        spec = boundary_from_partition(lam)
        expected = _guarded(report, f"A_{lam}", lambda: count_backtrack(spec, ctx.budget, ctx.workers))
        if expected is None:
            continue
        actual = []
        rowdp = _guarded(report, f"A_{lam} rowdp", lambda: count_spec(spec, Engine.ROWDP))
        if rowdp is not None:
            actual.append(rowdp)
        if lam.n >= 2:
            actual.append(decompose_count(lam))
        if actual:
            report.add_check(f"A_{lam} [rowdp, decompose]", [expected] * len(actual), actual)


def suite_asm_totals(report: RunReport, ctx: SuiteContext, n_max: int) -> None:
    for n in range(1, n_max + 1):
        found = _guarded(report, f"A({n})", lambda: count_backtrack(boundary_dwbc(n), ctx.budget, ctx.workers))
        if found is not None:
            report.add_check(f"A({n})", asm_total(n), found)


def suite_vsasm_totals(report: RunReport, ctx: SuiteContext, n_max: int) -> None:
    """Half-lattice enumeration and the staircase (n-1, ..., 0) both give A_V(2n+1)."""

    for n in range(1, n_max + 1):
        half = _guarded(report, f"A_V({2 * n + 1})", lambda: count_spec(boundary_vsasm(n), budget=ctx.budget))
        stair = _guarded(
            report, f"A_V({2 * n + 1}) staircase", lambda: count_partition(Partition.staircase(n, n - 1))
        )
        if half is not None and stair is not None:
            report.add_check(f"A_V({2 * n + 1}) [half-lattice, staircase]", [vsasm_total(n)] * 2, [half, stair])


def suite_pathcounts(report: RunReport, ctx: SuiteContext, r_max: int, c_max: int) -> None:
    """S(r, c) and T(r, c) are path counts and satisfy S(r, c) = S(r-1, c) + T(r, c-1)."""

    s_counts: Dict[tuple, int] = {}
    t_counts: Dict[tuple, int] = {}
    for r in range(1, r_max + 1):
        for c in range(1, c_max + 1):
            s_counts[(r, c)] = count_spec(boundary_S(r, c))
            t_counts[(r, c)] = count_spec(boundary_T(r, c))

    for r in range(1, r_max + 1):
        for c in range(1, c_max + 1):
            expected = path_count(r, c)
            if r > 1 and c > 1:
                recurrence = s_counts[(r - 1, c)] + t_counts[(r, c - 1)]
            else:
                recurrence = s_counts[(r, c)]
            actual = [s_counts[(r, c)], t_counts[(r, c)], recurrence]
            report.add_check(f"S,T,recurrence({r},{c})", [expected] * 3, actual)


def suite_lshape(report: RunReport, ctx: SuiteContext, n_max: int, m_max: int) -> None:
    for n in range(1, n_max + 1):
        for m in range(0, m_max + 1):
            for j in range(1, n + 1):
                report.add_check(f"L(n={n},m={m},j={j})", l_count(m, j), count_spec(boundary_L(n, m, j)))


def suite_decomposition(report: RunReport, ctx: SuiteContext, n_max: int, lambda_max: int) -> None:
    """Both splits reproduce the direct count."""

    for lam in _partitions(n_max, lambda_max, n_min=2):
        direct = _guarded(report, f"A_{lam}", lambda: count_partition(lam, Engine.BACKTRACK, ctx.budget))
        if direct is None:
            continue
        actual = [decompose_count(lam)]
        if lam.lambda1 > lam.lambda2:
            actual.append(decompose_staircase_count(lam))
        report.add_check(f"A_{lam} split", [direct] * len(actual), actual)


def suite_hooks(report: RunReport, ctx: SuiteContext, n_max: int, m_max: int, series_max: int) -> None:
    for n in range(1, n_max + 1):
        in_m = hook_poly_in_m(n)
        for m in range(0, m_max + 1):
            lam = Partition.hook(n, m)
            found = _guarded(report, f"A_{lam}", lambda: count_partition(lam))
            if found is None:
                continue
            actual = [hook_sum_refined(n, m), hook_sum_m(n, m), evaluate(in_m, m)]
            report.add_check(f"hook n={n} m={m}", [found] * 3, actual)

    for m in range(0, series_max + 1):
        report.add_check(f"A_({m},0)(2) = m+2", m + 2, count_partition(Partition.hook(2, m)))


def suite_staircase(report: RunReport, ctx: SuiteContext, n_max: int, extra: int, formula_n_max: int) -> None:
    for n in range(1, n_max + 1):
        for lambda1 in range(n - 1, n + extra + 1):
            lam = Partition.staircase(n, lambda1)
            found = _guarded(report, f"A_{lam}", lambda: count_partition(lam))
            if found is None:
                continue
            actual = [staircase_sum(n, lambda1), staircase_sum_lemma(n, lambda1 - n + 1)]
            report.add_check(f"staircase {lam}", [found] * 2, actual)

    for n in range(1, formula_n_max + 1):
        report.add_check(f"staircase sum n={n} at lambda_1=n-1", vsasm_total(n), staircase_sum(n, n - 1))


def suite_refined_asm(report: RunReport, ctx: SuiteContext, n_max: int, total_n_max: int) -> None:
    for n in range(2, n_max + 1):
        for j in range(1, n + 1):
            found = _guarded(report, f"A({n},{j})", lambda: count_spec(boundary_refined_asm(n, j), budget=ctx.budget))
            if found is not None:
                report.add_check(f"A({n},{j}) [enumerated, mirrored]", [found] * 2, [refined_asm(n, j), refined_asm(n, n + 1 - j)])

    for n in range(1, total_n_max + 1):
        row = [refined_asm(n, j) for j in range(1, n + 1)]
        report.add_check(f"sum_j A({n},j)", asm_total(n), sum(row))


def suite_refined_vsasm(report: RunReport, ctx: SuiteContext, n_max: int, total_n_max: int) -> None:
    """Enumeration, row sums and the reversal between row-indexed staircase right parts and
    column-indexed refined counts."""

    for n in range(2, n_max + 1):
        for i in range(1, n + 1):
            found = _guarded(
                report, f"A_V({2 * n + 1},{i})", lambda: count_spec(boundary_refined_vsasm(n, i), budget=ctx.budget)
            )
            if found is not None:
                report.add_check(f"A_V({2 * n + 1},{i}) enumerated", found, refined_vsasm(n, i))

        lam = Partition.staircase(n, n - 1)
        stair = [count_R_staircase(lam, i) for i in range(1, n + 1)]
        report.add_check(
            f"staircase right parts n={n} reversed",
            [refined_vsasm(n, n - i + 1) for i in range(1, n + 1)],
            stair,
        )

    for n in range(1, total_n_max + 1):
        row = [refined_vsasm(n, i) for i in range(1, n + 1)]
        report.add_check(f"sum_i A_V({2 * n + 1},i)", vsasm_total(n), sum(row))
        report.add_result(f"A_V({2 * n + 1},i) symmetric in i", row == row[::-1])


def suite_lemma13(report: RunReport, ctx: SuiteContext, m_max: int, n_max: int) -> None:
    for m in range(0, m_max + 1):
        for n in range(1, n_max + 1):
            expected = [lemma13_lhs(m, n), True]
            actual = [lemma13_rhs(m, n), check_eq_alambda_inter(m, n)]
            report.add_check(f"lhs=rhs, inter m={m} n={n}", expected, actual)


def suite_shift(report: RunReport, ctx: SuiteContext, n_max: int, lambda_max: int, d_max: int) -> None:
    for lam in _partitions(n_max, lambda_max):
        base = _guarded(report, f"A_{lam}", lambda: count_partition(lam))
        if base is None:
            continue
        shifted = [count_partition(lam.shifted(d)) for d in range(1, d_max + 1)]
        report.add_check(f"A_{lam} shifted d=1..{d_max}", [base] * d_max, shifted)
        report.add_check(
            f"lattice of {lam} plus one column equals lattice of its shift",
            True,
            appended_down_column(boundary_from_partition(lam)) == boundary_from_partition(lam.shifted(1)),
        )


def suite_table1(report: RunReport, ctx: SuiteContext) -> None:
    for m in sorted(PRINTED_RM):
        report.add_result(f"R_{m}(n)", build_rm_ratfunc(m))
        report.add_check(f"R_{m} matches printed form", True, matches_printed_rm(m))


def suite_degrees(report: RunReport, ctx: SuiteContext, m_max: int, n_max: int) -> None:
    """Degrees of the reduced R_m and integrality of A(n) R_m(n)."""

    for m in range(0, m_max + 1):
        value = build_rm_ratfunc(m)
        report.add_check(f"deg R_{m}", list(expected_degrees(m)), [value.num_degree, value.den_degree])

    for m in range(0, min(m_max, 6) + 1):
        value = build_rm_ratfunc(m)
        for n in range(1, n_max + 1):
            report.add_check(f"A({n}) R_{m}({n})", hook_sum_m(n, m), asm_total(n) * value.evaluate(n))


def suite_polynomial(report: RunReport, ctx: SuiteContext, n_max: int, lambda_max: int, samples: int) -> None:
    """The lambda_1 polynomial: degree, agreement with interpolation, out-of-sample values."""

    for n in range(2, n_max + 1):
        for tail in iter_partitions(n - 1, lambda_max):
            lambda2 = tail.lambda1
            name = f"tail {tail} n={n}"
            poly = _guarded(report, name, lambda: a_lambda_poly(tail.parts, n))
            if poly is None:
                continue
            report.add_check(f"{name} degree", n - 1, degree(poly))
            interp = interpolated_alambda_poly(tail.parts, n)
            report.add_check(f"{name} interpolation", coefficients(interp), coefficients(poly))

            xs = range(lambda2 + n, lambda2 + n + samples)
            expected = [count_partition(Partition((x,) + tail.parts)) for x in xs]
            report.add_check(f"{name} out-of-sample", expected, [evaluate(poly, x) for x in xs])


def suite_determinism(report: RunReport, ctx: SuiteContext, n_max: int, lambda_max: int) -> None:
    """Counts do not depend on the number of worker processes."""

    thread_counts = sorted({1, 2, 8, max(1, ctx.workers)})
    for lam in _partitions(n_max, lambda_max):
        spec = boundary_from_partition(lam)
        counts = [count_backtrack(spec, workers=k) for k in thread_counts]
        report.add_check(f"A_{lam} workers={thread_counts}", [counts[0]] * len(counts), counts)


def suite_bijection(report: RunReport, ctx: SuiteContext, n_max: int) -> None:
    """DWBC states map to distinct ASMs, keep the flux law and survive a JSON round trip."""

    for n in range(1, n_max + 1):
        matrices = set()
        valid = flux = round_trip = is_asm = True
        for state in enumerate_states(boundary_dwbc(n), ctx.budget):
            matrix = state_to_asm(state)
            matrices.add(tuple(tuple(row) for row in matrix))
            is_asm = is_asm and is_alternating_sign_matrix(matrix)
            valid = valid and validate_state(state)
            flux = flux and cut_up_counts(state) == list(range(n, -1, -1))
            restored = state_from_json(state_to_json(state))
            round_trip = round_trip and (restored.vertical, restored.horizontal) == (state.vertical, state.horizontal)
        report.add_check(
            f"DWBC n={n} [distinct ASMs, valid, ASM, flux, JSON]",
            [asm_total(n), True, True, True, True],
            [len(matrices), valid, is_asm, flux, round_trip],
        )


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("engines", suite_engines, {"n_max": 4, "lambda_max": 4}, "backtrack = rowdp = decomposition"),
        Suite("asm-totals", suite_asm_totals, {"n_max": 5}, "DWBC counts = A(n)"),
        Suite("vsasm-totals", suite_vsasm_totals, {"n_max": 3}, "VSASM half-lattice counts = A_V(2n+1)"),
        Suite("pathcounts", suite_pathcounts, {"r_max": 7, "c_max": 7}, "S(r,c) = T(r,c) = C(r+c-2, c-1)"),
        Suite("lshape", suite_lshape, {"n_max": 6, "m_max": 5}, "L(m,j) = C(m+j-1, m)"),
        Suite("decomposition", suite_decomposition, {"n_max": 4, "lambda_max": 4}, "both splits = direct count"),
        Suite("hooks", suite_hooks, {"n_max": 4, "m_max": 5, "series_max": 10}, "hook formulas = enumeration"),
        Suite("staircase", suite_staircase, {"n_max": 3, "extra": 3, "formula_n_max": 6}, "staircase formulas = enumeration"),
        Suite("refined-asm", suite_refined_asm, {"n_max": 4, "total_n_max": 8}, "refined ASM formula = enumeration"),
        Suite("refined-vsasm", suite_refined_vsasm, {"n_max": 3, "total_n_max": 8}, "refined VSASM formula = enumeration"),
        Suite("lemma13", suite_lemma13, {"m_max": 10, "n_max": 10}, "binomial convolution identity"),
        Suite("shift", suite_shift, {"n_max": 4, "lambda_max": 3, "d_max": 3}, "A_lambda = A_(lambda + d)"),
        Suite("table1", suite_table1, {}, "R_m(n) = printed table, m <= 5"),
        Suite("degrees", suite_degrees, {"m_max": 8, "n_max": 8}, "degrees and integrality of R_m"),
        Suite("polynomial", suite_polynomial, {"n_max": 4, "lambda_max": 3, "samples": 2}, "A_lambda polynomial in lambda_1"),
        Suite("determinism", suite_determinism, {"n_max": 4, "lambda_max": 2}, "counts independent of worker count"),
        Suite("bijection", suite_bijection, {"n_max": 4}, "DWBC states <-> ASMs"),
    ]
}


def run_suite(
    name: str,
    bounds: Dict[str, int] | None = None,
    workers: int = 1,
    budget: EnumBudget | None = None,
) -> RunReport:
    """Run one suite with its default bounds overridden by `bounds`.

    Bounds the suite does not take are reported as warnings and ignored.
    """

    if name not in SUITES:
        raise ValueError(f"Unknown suite {name!r}; choose one of {', '.join(SUITES)}.")
    suite = SUITES[name]

    params = dict(suite.defaults)
    ignored: List[str] = []
    for key, value in (bounds or {}).items():
        if value is None:
            continue
        if key in params:
            params[key] = int(value)
        else:
            ignored.append(key)

    report = RunReport(command=f"verify {name}", inputs={"suite": name, **params})
    for key in ignored:
        report.warn(f"--{key.replace('_', '-')} does not apply to suite {name}; ignored")

    ctx = SuiteContext(workers=max(1, int(workers)), budget=budget or EnumBudget.unlimited())
    get_logger().info("verify %s %s", name, params)
    suite.fn(report, ctx, **params)
    return report.finish()
