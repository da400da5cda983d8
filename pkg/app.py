"""Command-line entry point.

This file is responsible for:
- Parsing the sub-command and its flags
- Routing each command through `safe_command` (exit codes, logging)
- Printing the report as text tables or JSON

The counting logic lives in backend/*; each command's page lives in ui/*.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error, 3 capacity or budget.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional

from backend.core.config_manager import get_config
from backend.core.error_handler import safe_command
from backend.core.logger import audit_log, get_logger
from backend.enumeration.backtrack import EnumBudget
from backend.results.result_parser import FORMATS, render_report
from backend.results.run_report import RunReport
from ui.count_command import METHODS, cmd_count
from ui.poly_command import cmd_poly
from ui.render_command import cmd_render
from ui.table_command import TABLES, cmd_table
from ui.verify_command import cmd_verify, suite_names
from utils.validators import parse_partition, parse_tail, require_int


# Suite bounds exposed as --<name> flags.
BOUND_FLAGS = ("n_max", "m_max", "r_max", "c_max", "lambda_max", "d_max", "total_n_max",
               "formula_n_max", "series_max", "extra", "samples")


def _common_flags() -> argparse.ArgumentParser:
    cfg = get_config()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--format", choices=FORMATS, default="markdown", help="table format for text output")
    common.add_argument("--threads", type=int, default=cfg.threads, help="worker processes for backtracking")
    common.add_argument("--budget-nodes", type=int, default=cfg.budget_nodes, help="search node cap (0 = none)")
    common.add_argument("--no-meta", action="store_true", help="omit timing and timestamps")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="icecount", description="Exact counting for six-vertex lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", parents=[common], help="count the states for one partition")
    count.add_argument("-p", "--partition", required=True, help="comma-separated parts, e.g. 2,2,0")
    count.add_argument("-m", "--method", choices=METHODS, default=None)

    verify = sub.add_parser("verify", parents=[common], help="run an exact verification sweep")
    verify.add_argument("suite", choices=suite_names())
    for name in BOUND_FLAGS:
        verify.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=None)

    poly = sub.add_parser("poly", parents=[common], help="A_lambda(n) as a polynomial in lambda_1")
    poly.add_argument("--tail", required=True, help="lambda_2..lambda_n, e.g. 1,0")
    poly.add_argument("--n", dest="n", type=int, required=True)
    poly.add_argument("--samples", type=int, default=2, help="out-of-sample points checked")

    render = sub.add_parser("render", parents=[common], help="draw one state")
    render.add_argument("-p", "--partition", required=True)
    render.add_argument("-i", "--index", type=int, default=0)

    table = sub.add_parser("table", parents=[common], help="closed-form tables")
    table.add_argument("kind", choices=list(TABLES), nargs="?", default="rm")
    table.add_argument("--n-max", dest="n_max", type=int, default=8)
    table.add_argument("--m-max", dest="m_max", type=int, default=5)

    return parser


def _budget(args: argparse.Namespace) -> Optional[EnumBudget]:
    nodes = require_int(args.budget_nodes, "--budget-nodes", minimum=0)
    return EnumBudget(max_nodes=nodes) if nodes else None


def _run_count(args: argparse.Namespace) -> RunReport:
    workers = require_int(args.threads, "--threads", minimum=1)
    return cmd_count(parse_partition(args.partition), args.method, workers=workers, budget=_budget(args))


def _run_verify(args: argparse.Namespace) -> RunReport:
    workers = require_int(args.threads, "--threads", minimum=1)
    bounds = {name: getattr(args, name) for name in BOUND_FLAGS}
    for name, value in bounds.items():
        if value is not None:
            require_int(value, f"--{name.replace('_', '-')}", minimum=0)
    return cmd_verify(args.suite, bounds=bounds, workers=workers, budget=_budget(args))


def _run_poly(args: argparse.Namespace) -> RunReport:
    return cmd_poly(parse_tail(args.tail, args.n), args.n, samples=require_int(args.samples, "--samples"))


def _run_render(args: argparse.Namespace) -> RunReport:
    return cmd_render(parse_partition(args.partition), args.index, budget=_budget(args))


def _run_table(args: argparse.Namespace) -> RunReport:
    n_max = require_int(args.n_max, "--n-max", minimum=1)
    m_max = require_int(args.m_max, "--m-max", minimum=0)
    return cmd_table(args.kind, n_max=n_max, m_max=m_max)


RUNNERS: Dict[str, Callable[[argparse.Namespace], RunReport]] = {
    "count": _run_count,
    "verify": _run_verify,
    "poly": _run_poly,
    "render": _run_render,
    "table": _run_table,
}


def _emit(report: RunReport, args: argparse.Namespace) -> int:
    meta = not args.no_meta
    if args.json:
        print(report.to_json(meta=meta))
    else:
        print(render_report(report, fmt=args.format, meta=meta))
    audit_log(event_type=report.command, details={**report.summary(), "exit": report.exit_code})
    return report.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    get_logger().debug("icecount %s", args)

    runner = RUNNERS[args.command]
    context = {"command": args.command, "argv": list(argv) if argv is not None else sys.argv[1:]}

    @safe_command(args.command, context=context)
    def _command() -> int:
        return _emit(runner(args), args)

    return _command()


if __name__ == "__main__":
    sys.exit(main())
