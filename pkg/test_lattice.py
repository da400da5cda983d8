"""Partitions, boundary specs, states, ASMs and the state JSON format."""

import json

import pytest

from backend.core.error_handler import DimensionMismatchError
from backend.enumeration.backtrack import enumerate_states
from backend.lattice.asm import is_alternating_sign_matrix, state_to_asm
from backend.lattice.boundary import (
    BoundaryFamily,
    BoundarySpec,
    appended_down_column,
    boundary_L,
    boundary_R,
    boundary_R_staircase,
    boundary_S,
    boundary_T,
    boundary_dwbc,
    boundary_from_partition,
    boundary_refined_asm,
    boundary_refined_vsasm,
    boundary_vsasm,
)
from backend.lattice.grid_state import GridState, VertexState, cut_up_counts, validate_state, vertex_kind
from backend.lattice.partition import Partition, iter_partitions
from backend.lattice.serializer import state_from_json, state_to_dict, state_to_json


def test_partition_parse_and_properties():
    lam = Partition.parse("2,2,0")
    assert lam.parts == (2, 2, 0)
    assert lam.n == 3
    assert lam.plus_rho == (5, 4, 1)
    assert lam.width == 5
    assert str(lam) == "2,2,0"


@pytest.mark.parametrize("text", ["", "2,,0", "a,1", "0,1", "-1"])
def test_partition_parse_rejects_bad_input(text):
    with pytest.raises(ValueError):
        Partition.parse(text)


def test_partition_shapes():
    assert Partition.hook(3, 2, 1).parts == (3, 1, 1)
    assert Partition.staircase(3, 2).parts == (2, 1, 0)
    assert Partition.staircase(4, 5, 1).parts == (6, 3, 2, 1)
    assert Partition.of(3, 1, 1).is_hook()
    assert Partition.of(2, 1, 0).is_staircase()
    assert not Partition.of(2, 2, 1, 0).is_staircase()
    with pytest.raises(ValueError):
        Partition.staircase(3, 1)


def test_iter_partitions_counts():
    # partitions into n parts bounded by k: C(n+k, n)
    assert len(list(iter_partitions(3, 4))) == 35
    assert all(p.lambda1 <= 2 for p in iter_partitions(4, 2))


def test_partition_boundary_top_row():
    assert boundary_from_partition(Partition.zero(3)).top == (1, 1, 1)
    assert boundary_from_partition(Partition.of(1, 0)).top == (1, 0, 1)
    spec = boundary_from_partition(Partition.of(2, 2, 0))
    assert spec.feasible
    assert spec.arrows("left") == "RRR"
    assert spec.arrows("right") == "LLL"
    assert spec.family is BoundaryFamily.PARTITION


def test_shift_appends_a_down_column():
    lam = Partition.of(2, 1, 0)
    assert appended_down_column(boundary_from_partition(lam)) == boundary_from_partition(lam.shifted(1))


def test_spec_length_mismatch_raises():
    with pytest.raises(DimensionMismatchError):
        BoundarySpec(rows=2, cols=2, top=(1, 1), bottom=(0,), left=(1, 1), right=(0, 0))


def test_infeasible_spec_is_flagged():
    spec = BoundarySpec.from_arrows(top="UU", bottom="DD", left="R", right="L")
    assert spec.balance == -1
    assert not spec.feasible


def test_right_part_widths():
    lam = Partition.of(3, 1, 0)
    assert boundary_R(lam, 2).cols == 3
    assert boundary_R_staircase(lam, 2).cols == 4
    with pytest.raises(ValueError):
        boundary_R_staircase(Partition.of(1, 1, 0), 1)


def test_vsasm_boundaries():
    spec = boundary_refined_vsasm(3, 2)
    assert (spec.rows, spec.cols) == (4, 3)
    assert spec.arrows("top") == "UDU"
    assert spec.arrows("right") == "RLRL"
    half = boundary_vsasm(2)
    assert half.arrows("right") == "LRL"
    assert half.feasible and spec.feasible


def test_dwbc_states_are_asms_with_flux():
    states = list(enumerate_states(boundary_dwbc(3)))
    assert len(states) == 7
    matrices = {tuple(map(tuple, state_to_asm(s))) for s in states}
    assert len(matrices) == 7
    assert ((0, 1, 0), (1, -1, 1), (0, 1, 0)) in matrices
    for state in states:
        assert validate_state(state)
        assert is_alternating_sign_matrix(state_to_asm(state))
        assert cut_up_counts(state) == [3, 2, 1, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_partition_states_obey_the_flux_law(n):
    for lam in iter_partitions(n, 3):
        states = list(enumerate_states(boundary_from_partition(lam)))
        assert states, lam
        for state in states:
            assert cut_up_counts(state) == [n - r for r in range(n + 1)], lam


@pytest.mark.parametrize("n", range(1, 7))
def test_constructors_are_feasible(n):
    for lam in iter_partitions(n, 8):
        assert boundary_from_partition(lam).feasible
        if n >= 2:
            assert all(boundary_R(lam, j).feasible for j in range(1, n + 1))
        if n >= 2 and lam.lambda1 > lam.lambda2:
            assert all(boundary_R_staircase(lam, i).feasible for i in range(1, n + 1))
    for m in range(9):
        assert all(boundary_L(n, m, j).feasible for j in range(1, n + 1))
    if n >= 2:
        assert all(boundary_refined_asm(n, j).feasible for j in range(1, n + 1))
        assert all(boundary_refined_vsasm(n, i).feasible for i in range(1, n + 1))
    assert boundary_dwbc(n).feasible
    assert boundary_vsasm(n).feasible


@pytest.mark.parametrize("r", range(1, 9))
def test_path_lattices_are_feasible(r):
    for c in range(1, 9):
        assert boundary_S(r, c).feasible
        assert boundary_T(r, c).feasible


def test_single_vertex_state():
    (state,) = list(enumerate_states(boundary_dwbc(1)))
    assert vertex_kind(state, 0, 0) is VertexState.C1
    assert state_to_asm(state) == [[1]]


def test_validate_state_detects_bad_edges():
    state = next(enumerate_states(boundary_dwbc(2)))
    vertical = [list(row) for row in state.vertical]
    vertical[1][0] ^= 1
    broken = GridState(spec=state.spec, vertical=vertical, horizontal=state.horizontal)
    assert not validate_state(broken)

    short = GridState(spec=state.spec, vertical=state.vertical[:-1], horizontal=state.horizontal)
    with pytest.raises(DimensionMismatchError):
        validate_state(short)


def test_asm_checker():
    assert is_alternating_sign_matrix([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
    assert not is_alternating_sign_matrix([[1, 0], [1, 0]])
    assert not is_alternating_sign_matrix([[0, 1, 0], [1, 0, 0], [0, 1, 0]])


def test_state_to_asm_needs_dwbc():
    state = next(enumerate_states(boundary_from_partition(Partition.of(1, 0))))
    with pytest.raises(ValueError):
        state_to_asm(state)


def test_state_json_round_trip():
    state = list(enumerate_states(boundary_dwbc(3)))[3]
    payload = state_to_dict(state)
    assert payload["vertical"][0] == "UUU"
    assert payload["horizontal"][0][0] == "R"

    restored = state_from_json(state_to_json(state))
    assert restored.vertical == state.vertical
    assert restored.horizontal == state.horizontal
    assert validate_state(restored)


def test_state_json_rejects_bad_payload():
    payload = state_to_dict(next(enumerate_states(boundary_dwbc(2))))
    del payload["vertical"]
    with pytest.raises(ValueError):
        state_from_json(json.dumps(payload))
