import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cases import BOUND_ONE_ROWS, EXAMPLE_OUT
from dappled import (
    INF,
    Condition,
    ConditionSet,
    TileSet,
    Tiling,
    assert_no_regression,
    dapple,
    draughtboard,
    enumerate_dappled,
    find_violations,
    is_dappled,
    weight,
)
from dappled.dappler import FLIP, MULTI, SURGERY, visit_order
from dappled.errors import InvalidConditions, MismatchedShapes


def random_tiling(rng, m, n, k=2):
    return Tiling(m, n, tuple(rng.randrange(k) for _ in range(m * n)), TileSet.of_size(k))


def random_conditions(rng, k, m=None, n=None, per_cell=False):
    conds = []
    for t in range(k):
        for axis in "HV":
            if per_cell and rng.random() < 0.5:
                grid = [[rng.choice([2, 3, 4, INF]) for _ in range(m)] for _ in range(n)]
                conds.append(Condition(t, axis, INF, grid))
            else:
                conds.append(Condition(t, axis, rng.choice([2, 3, INF])))
    return ConditionSet(tuple(conds))


def test_worked_example(h2v2, example_in):
    g, trace = dapple(example_in, h2v2)
    assert g.rows() == EXAMPLE_OUT
    # (2,0) is flipped; at (2,2) a flip would make a row of three 0s
    assert [(e.cell, e.action) for e in trace] == [((2, 0), FLIP), ((2, 2), SURGERY)]


def test_surgery_writes(h2v2, example_in):
    _, trace = dapple(example_in, h2v2)
    surgery = trace[1]
    # the cell copies its upper-left neighbour (1,1)=0; left and upper get 1
    assert dict(surgery.writes) == {(2, 2): 0, (1, 2): 1, (2, 1): 1}


def test_visit_order():
    order = visit_order(3, 2)
    assert order == ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1))
    assert len(set(visit_order(5, 4))) == 20


def test_bound_one_rejected():
    f = Tiling.from_rows(BOUND_ONE_ROWS)
    L = ConditionSet.of((0, "H", 1), (1, "H", 2), (1, "V", 2))
    with pytest.raises(InvalidConditions):
        dapple(f, L)


def test_per_cell_bound_one_rejected():
    f = Tiling.from_rows([[0, 1]])
    with pytest.raises(InvalidConditions):
        dapple(f, ConditionSet((Condition(0, "H", INF, [[2, 1]]),)))


def test_grid_shape_mismatch():
    f = Tiling.from_rows([[0, 1, 0]])
    with pytest.raises(MismatchedShapes):
        dapple(f, ConditionSet((Condition(0, "H", INF, [[2, 2]]),)))


def test_cyclic_set_rejected(h2v2, example_in):
    with pytest.raises(InvalidConditions):
        dapple(example_in, h2v2.with_cyclic(True))


def test_input_not_mutated(h2v2, example_in):
    before = example_in.cells
    dapple(example_in, h2v2)
    assert example_in.cells == before


def test_draughtboard_fixed():
    L = ConditionSet.of((0, "H", 2), (1, "V", 2), (2, "H", 3), (2, "V", 2))
    for seed in range(10):
        d = draughtboard(9, 7, 3, seed)
        g, trace = dapple(d, L)
        assert g == d and len(trace) == 0


def test_more_tiles_shortcut():
    f = Tiling.from_rows([[2, 2, 2, 2], [2, 2, 2, 2], [2, 2, 2, 2]], TileSet.of_size(3))
    L = ConditionSet.of((2, "H", 2), (2, "V", 2))
    g, trace = dapple(f, L)
    assert is_dappled(g, L)[0]
    assert {e.action for e in trace} == {MULTI}
    # smallest index unlike left and upper neighbour
    assert g.rows()[0] == [2, 2, 0, 2]


class TestNoRegression:
    def test_flip_is_safe(self):
        L = ConditionSet.of((0, "H", 2), (1, "V", 2))
        before = Tiling.from_rows([[0, 0, 0]])
        after = Tiling.from_rows([[0, 0, 1]])
        assert assert_no_regression(before, after, (2, 0), L)

    def test_surgery_case(self, h2v2, example_in):
        g, trace = dapple(example_in, h2v2, check=True)
        assert g.rows() == EXAMPLE_OUT

    def test_detects_bad_surgery(self):
        # q = 2 and two t's above (i, j-1): writing t there makes a vertical run of 3
        L = ConditionSet.of((1, "V", 2))
        before = Tiling.from_rows([[0, 1], [0, 1], [0, 0], [0, 0]])
        bad = before.with_cells([((1, 2), 1)])
        assert not assert_no_regression(before, bad, (1, 3), L)

    def test_existing_later_violation_ignored(self):
        # (4,0) shares the weight of (3,1) but is visited after it
        L = ConditionSet.of((0, "H", 2), (1, "H", 3))
        before = Tiling.from_rows([[0, 1, 1, 1, 1], [1, 0, 0, 0, 0]])
        after = before.with_cells([((3, 1), 1)])
        assert assert_no_regression(before, after, (3, 1), L)

    def test_unrepaired_cell_fails(self):
        L = ConditionSet.of((0, "H", 2))
        f = Tiling.from_rows([[0, 0, 0]])
        assert not assert_no_regression(f, f, (2, 0), L)

    def test_shapes(self, h2v2):
        with pytest.raises(MismatchedShapes):
            assert_no_regression(Tiling.from_rows([[0]]), Tiling.from_rows([[0, 1]]), (0, 0), h2v2)


def test_trace_order():
    rng = random.Random(4)
    L = ConditionSet.of((0, "H", 2), (1, "V", 2), (1, "H", 3))
    for _ in range(30):
        _, trace = dapple(random_tiling(rng, 9, 7), L)
        keys = [(weight(e.cell), e.cell[0]) for e in trace]
        assert keys == sorted(keys)


def test_trace_replay(h2v2):
    rng = random.Random(9)
    for _ in range(30):
        f = random_tiling(rng, 8, 6)
        g, trace = dapple(f, h2v2)
        replayed = f
        for e in trace:
            replayed = replayed.with_cells(e.writes)
        assert replayed == g


def _progress(f, L):
    reps = find_violations(f, L)
    if not reps:
        return (float("inf"), 0)
    w = min(weight(r.cell) for r in reps)
    return (w, -len({r.cell for r in reps if weight(r.cell) == w}))


def test_progress_measure():
    rng = random.Random(12)
    for trial in range(40):
        m, n = rng.randint(2, 8), rng.randint(2, 8)
        L = random_conditions(rng, 2)
        f = random_tiling(rng, m, n)
        _, trace = dapple(f, L)
        cur = f
        prev = _progress(cur, L)
        for e in trace:
            cur = cur.with_cells(e.writes)
            now = _progress(cur, L)
            assert now > prev, (trial, e)
            prev = now
        assert prev == (float("inf"), 0)


def test_retraction_exhaustive_3x3_all_bounds():
    # every condition set with bounds in {2, inf} on two tiles
    for bounds in itertools.product([2, INF], repeat=4):
        L = ConditionSet.of((0, "H", bounds[0]), (0, "V", bounds[1]),
                            (1, "H", bounds[2]), (1, "V", bounds[3]))
        outputs = set()
        for cells in itertools.product((0, 1), repeat=9):
            f = Tiling(3, 3, cells)
            g, _ = dapple(f, L)
            assert is_dappled(g, L)[0]
            if is_dappled(f, L)[0]:
                assert g == f
            outputs.add(g.cells)
        expected = {t.cells for t in enumerate_dappled(3, 3, 2, L, keep=True).tilings}
        assert outputs == expected


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(2, 4), st.integers(0, 10**6))
def test_output_valid_and_idempotent(m, n, k, seed):
    rng = random.Random(seed)
    L = random_conditions(rng, k)
    f = random_tiling(rng, m, n, k)
    g, _ = dapple(f, L)
    assert is_dappled(g, L)[0]
    assert oracles.ok(g.rows(), [(c.tile, c.axis, c.bound) for c in L])
    assert dapple(g, L)[0] == g


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(2, 3), st.integers(0, 10**6))
def test_per_cell_bounds(m, n, k, seed):
    rng = random.Random(seed)
    L = random_conditions(rng, k, m, n, per_cell=True)
    f = random_tiling(rng, m, n, k)
    g, _ = dapple(f, L, check=True)
    assert is_dappled(g, L)[0]
    assert dapple(g, L)[0] == g


def test_large_grid_fast():
    rng = random.Random(1)
    f = random_tiling(rng, 200, 200)
    L = ConditionSet.of((0, "H", 2), (1, "V", 2))
    g, _ = dapple(f, L)
    assert is_dappled(g, L)[0]


def test_trace_json(h2v2, example_in):
    import json

    _, trace = dapple(example_in, h2v2)
    data = json.loads(trace.to_json())
    assert data[0] == {"cell": [2, 0], "action": "flip", "writes": [[2, 0, 1]]}
