"""Polynomials in lambda_1, the R_m(n) table and the convolution identity."""

from fractions import Fraction

import pytest
import sympy as sp

from backend.enumeration.enumeration_service import count_partition
from backend.exactalg.alambda_poly import a_lambda_poly, hook_poly_in_m, interpolated_alambda_poly
from backend.exactalg.identities import (
    alambda_inter_value,
    check_eq_alambda_inter,
    lemma13_lhs,
    lemma13_rhs,
)
from backend.exactalg.interpolation import interpolate
from backend.exactalg.poly import N, RatFunc, coefficients, degree, evaluate, make_poly, render_poly
from backend.exactalg.rm_table import PRINTED_RM, expected_degrees, matches_printed_rm, printed_rm, rm_ratfunc
from backend.formulas.asm_formulas import asm_total
from backend.formulas.hook_formulas import hook_sum_m, hook_sum_refined
from backend.lattice.partition import Partition


def test_interpolation():
    assert coefficients(interpolate([(0, 1), (1, 2)])) == [1, 1]
    collapsed = interpolate([(1, 3), (2, 4), (3, 5)])
    assert degree(collapsed) == 1
    assert coefficients(collapsed) == [2, 1]
    assert coefficients(interpolate([(5, 7)])) == [7]
    assert coefficients(interpolate([(0, 0), (2, 1)])) == [0, Fraction(1, 2)]


def test_interpolation_rejects_bad_nodes():
    with pytest.raises(ValueError):
        interpolate([(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        interpolate([])


def test_ratfunc_is_reduced_and_monic():
    value = RatFunc(make_poly([0, 2, 2], N), make_poly([0, 4], N))
    assert coefficients(value.num) == [Fraction(1, 2), Fraction(1, 2)]
    assert coefficients(value.den) == [1]
    assert value.evaluate(3) == 2
    with pytest.raises(ZeroDivisionError):
        RatFunc(make_poly([1], N), make_poly([], N))


def test_a_lambda_poly_examples():
    p = a_lambda_poly((0,), 2)
    assert coefficients(p) == [2, 1]
    assert render_poly(p) == "lambda1 + 2"

    q = a_lambda_poly((0, 0), 3)
    assert degree(q) == 2
    assert evaluate(q, 0) == 7

    s = a_lambda_poly((1, 0), 3)
    assert evaluate(s, 2) == 26
    assert evaluate(s, 3) == 41


@pytest.mark.parametrize("tail", [(0,), (2,), (0, 0), (1, 0), (2, 2), (1, 1, 0), (2, 1, 1)])
def test_a_lambda_poly_predicts_counts(tail):
    n = len(tail) + 1
    poly = a_lambda_poly(tail, n)
    assert degree(poly) == n - 1
    assert coefficients(poly) == coefficients(interpolated_alambda_poly(tail, n))
    lambda2 = tail[0]
    for x in range(lambda2 + n, lambda2 + n + 2):
        assert evaluate(poly, x) == count_partition(Partition((x,) + tail))


def test_a_lambda_poly_input_checks():
    with pytest.raises(ValueError):
        a_lambda_poly((), 1)
    with pytest.raises(ValueError):
        a_lambda_poly((0, 0), 2)


def test_hook_poly_in_m():
    assert coefficients(hook_poly_in_m(2)) == [2, 1]
    p3 = hook_poly_in_m(3)
    assert [evaluate(p3, m) for m in range(3)] == [7, 14, 23]
    for m in range(6):
        assert evaluate(hook_poly_in_m(4), m) == hook_sum_refined(4, m)


def test_rm_table_rows():
    assert rm_ratfunc(0).render() == "1"
    assert rm_ratfunc(1).cross_equal(RatFunc.from_expr((N + 1) / 2, N))
    assert rm_ratfunc(2).to_dict() == {
        "num_coeffs": [[1, 4], [3, 8], [3, 4], [1, 8]],
        "den_coeffs": [[1, 2], [1, 1]],
    }
    for m in sorted(PRINTED_RM):
        assert matches_printed_rm(m)


def test_printed_rm_row_4_misprint_is_not_integral():
    as_printed = RatFunc.from_expr(
        sp.sympify(
            "(n**6 + 27*n**5 + 199*n**4 + 456*n**3 + 448*n**2 + 156*n + 144)/(96*(4*n**2 + 8*n + 3))",
            locals={"n": N},
        ),
        N,
    )
    assert as_printed.evaluate(1) == Fraction(159, 160)
    assert not rm_ratfunc(4).cross_equal(as_printed)
    assert printed_rm(4).evaluate(1) == 1
    for n in range(1, 6):
        assert asm_total(n) * printed_rm(4).evaluate(n) == hook_sum_m(n, 4)


def test_ratfunc_renders_integer_content():
    assert rm_ratfunc(1).render() == "(n + 1)/2"
    assert rm_ratfunc(2).render() == "(n**3 + 6*n**2 + 3*n + 2)/(4*(2*n + 1))"
    assert rm_ratfunc(4).render() == PRINTED_RM[4]
    assert RatFunc.from_expr(-N / 3, N).render() == "(-n)/3"
    assert RatFunc.from_expr(sp.Integer(0), N).render() == "0"
    assert RatFunc.from_expr(2 * N + 4, N).render() == "2*(n + 2)"
    # stored form stays monic
    assert coefficients(rm_ratfunc(2).den) == [Fraction(1, 2), 1]


def test_printed_rm_rejects_unknown_rows():
    with pytest.raises(ValueError):
        printed_rm(6)


def test_rm_degrees():
    for m in range(9):
        value = rm_ratfunc(m)
        assert (value.num_degree, value.den_degree) == expected_degrees(m)


def test_rm_times_asm_is_the_hook_count():
    for m in range(7):
        for n in range(1, 9):
            assert asm_total(n) * rm_ratfunc(m).evaluate(n) == hook_sum_m(n, m)


def test_rm_cross_check_catches_differences():
    assert not rm_ratfunc(2).cross_equal(RatFunc.from_expr(sp.sympify("(n**3 + 6*n**2 + 3*n + 2)/(8*n + 2)", locals={"n": N}), N))


def test_lemma13_examples():
    assert lemma13_lhs(1, 2) == -6
    assert lemma13_rhs(1, 2) == -6
    assert lemma13_rhs(0, 1) == 1
    assert alambda_inter_value(1, 2) == 3
    assert alambda_inter_value(0, 3) == 7


def test_lemma13_grid():
    for m in range(11):
        for n in range(1, 11):
            assert lemma13_lhs(m, n) == lemma13_rhs(m, n)
            assert check_eq_alambda_inter(m, n)
