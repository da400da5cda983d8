"""`poly`: A_lambda(n) as a polynomial in lambda_1, checked against enumeration
past the points its construction touches."""

from __future__ import annotations

from typing import Sequence

from backend.enumeration.enumeration_service import count_partition
from backend.exactalg.alambda_poly import a_lambda_poly
from backend.exactalg.poly import degree, evaluate
from backend.lattice.partition import Partition
from backend.results.run_report import RunReport


def cmd_poly(tail: Sequence[int], n: int, samples: int = 2) -> RunReport:
    tail = tuple(tail)
    report = RunReport(command="poly", inputs={"tail": list(tail), "n": n, "samples": samples})

    poly = a_lambda_poly(tail, n)
    report.add_result("A_lambda(n) in lambda1", poly)
    report.add_result("degree", degree(poly))

    lambda2 = tail[0]
    for x in range(lambda2, lambda2 + n):
        report.add_result(f"p({x})", evaluate(poly, x))

    for x in range(lambda2 + n, lambda2 + n + samples):
        report.add_check(f"p({x}) vs enumeration", count_partition(Partition((x,) + tail)), evaluate(poly, x))
    return report.finish()
