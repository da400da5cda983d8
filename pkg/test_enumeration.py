"""Both engines, the parallel split, budgets and capacity limits."""

import pytest

from backend.core.error_handler import BudgetExceededError, CapacityError
from backend.enumeration.backtrack import EnumBudget, count_backtrack, enumerate_states
from backend.enumeration.enumeration_service import (
    Engine,
    count_partition,
    count_R,
    count_R_row,
    count_R_staircase,
    count_spec,
    resolve_engine,
)
from backend.enumeration.row_dp import count_rowdp, row_transitions
from backend.lattice.boundary import (
    BoundarySpec,
    boundary_L,
    boundary_S,
    boundary_T,
    boundary_dwbc,
    boundary_from_partition,
    boundary_refined_asm,
    boundary_refined_vsasm,
    boundary_vsasm,
)
from backend.lattice.partition import Partition


ASM = [1, 2, 7, 42, 429, 7436, 218348]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_backtrack_dwbc(n):
    assert count_backtrack(boundary_dwbc(n)) == ASM[n - 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_rowdp_dwbc(n):
    assert count_rowdp(boundary_dwbc(n)) == ASM[n - 1]


def test_engines_agree_on_partitions():
    for parts in [(2, 2, 0), (3, 1, 0), (1, 1, 1), (2, 0, 0, 0), (3, 2, 2, 1)]:
        lam = Partition(parts)
        spec = boundary_from_partition(lam)
        assert count_backtrack(spec) == count_rowdp(spec)


def _family_specs():
    for r in range(1, 6):
        for c in range(1, 6):
            yield boundary_S(r, c)
            yield boundary_T(r, c)
    for n in range(1, 5):
        for m in range(4):
            for j in range(1, n + 1):
                yield boundary_L(n, m, j)
    for n in range(2, 6):
        for j in range(1, n + 1):
            yield boundary_refined_asm(n, j)
    for n in range(2, 5):
        for i in range(1, n + 1):
            yield boundary_refined_vsasm(n, i)
    for n in range(1, 5):
        yield boundary_vsasm(n)


@pytest.mark.parametrize("spec", list(_family_specs()))
def test_engines_agree_on_every_family(spec):
    assert spec.rows * spec.cols <= 36
    streamed = sum(1 for _ in enumerate_states(spec))
    assert count_backtrack(spec) == count_rowdp(spec) == streamed


def test_s_recurrence_mixes_s_and_t():
    for r in range(2, 8):
        for c in range(2, 8):
            expected = count_spec(boundary_S(r - 1, c)) + count_spec(boundary_T(r, c - 1))
            assert count_spec(boundary_S(r, c)) == expected


def test_backtrack_refuses_lattices_deeper_than_the_stack():
    spec = boundary_S(450, 2)
    with pytest.raises(CapacityError):
        count_backtrack(spec)
    with pytest.raises(CapacityError):
        next(enumerate_states(spec))
    assert count_rowdp(spec) == 450


def test_hook_counts():
    assert [count_partition(Partition.hook(3, m)) for m in range(3)] == [7, 14, 23]
    assert count_partition(Partition.hook(4, 1)) == 105
    assert [count_partition(Partition.hook(2, m)) for m in range(6)] == [2, 3, 4, 5, 6, 7]


def test_staircase_counts():
    assert count_partition(Partition.of(2, 1, 0)) == 26
    assert count_partition(Partition.of(3, 1, 0)) == 41


def test_path_and_l_lattices():
    assert count_spec(boundary_S(4, 3)) == 10
    assert count_spec(boundary_T(4, 3)) == 10
    assert count_spec(boundary_L(3, 1, 2)) == 2
    assert count_spec(boundary_L(4, 2, 3)) == 6


def test_refined_lattices():
    assert [count_spec(boundary_refined_asm(4, j)) for j in range(1, 5)] == [7, 14, 14, 7]
    assert [count_spec(boundary_refined_vsasm(2, i)) for i in (1, 2)] == [1, 2]
    assert [count_spec(boundary_refined_vsasm(3, i)) for i in (1, 2, 3)] == [3, 9, 14]
    assert [count_spec(boundary_vsasm(n)) for n in (1, 2, 3)] == [1, 3, 26]


def test_right_parts():
    assert count_R_row(Partition.of(0, 0)) == [1, 1]
    assert [count_R_staircase(Partition.of(1, 0), i) for i in (1, 2)] == [2, 1]
    assert [count_R_staircase(Partition.of(2, 1, 0), i) for i in (1, 2, 3)] == [14, 9, 3]
    # R does not see lambda_1
    assert count_R(Partition.of(2, 1, 0), 2) == count_R(Partition.of(5, 1, 0), 2)


def test_infeasible_spec_has_no_states():
    spec = BoundarySpec.from_arrows(top="UU", bottom="DD", left="R", right="L")
    assert count_backtrack(spec) == 0
    assert count_rowdp(spec) == 0
    assert list(enumerate_states(spec)) == []


def test_enumeration_is_deterministic():
    spec = boundary_from_partition(Partition.of(2, 1, 0))
    first = [s.vertical for s in enumerate_states(spec)]
    second = [s.vertical for s in enumerate_states(spec)]
    assert first == second
    assert len(first) == 26


def test_parallel_split_matches_sequential():
    spec = boundary_from_partition(Partition.of(2, 1, 1, 0))
    expected = count_backtrack(spec)
    assert count_backtrack(spec, workers=2) == expected
    assert count_backtrack(spec, workers=4) == expected


def test_node_budget():
    with pytest.raises(BudgetExceededError) as info:
        count_backtrack(boundary_dwbc(4), budget=EnumBudget(max_nodes=5))
    assert info.value.nodes >= 5


def test_state_budget_stops_stream():
    stream = enumerate_states(boundary_dwbc(3), budget=EnumBudget(max_states=3))
    with pytest.raises(BudgetExceededError):
        list(stream)


def test_budget_rejects_nonpositive_caps():
    with pytest.raises(ValueError):
        EnumBudget(max_nodes=0)


def test_rowdp_capacity(monkeypatch):
    monkeypatch.setenv("ICECOUNT_ROWDP_MAX_COLS", "2")
    with pytest.raises(CapacityError):
        count_rowdp(boundary_dwbc(3))
    assert resolve_engine(boundary_dwbc(3)) is Engine.BACKTRACK
    assert count_spec(boundary_dwbc(3)) == 7


def test_row_transition_single_column():
    # top Up, left Right and right Left force bottom Down (a c1 vertex).
    assert row_transitions(1, 1, 0, 1) == (0,)
    assert row_transitions(0, 1, 0, 1) == ()
