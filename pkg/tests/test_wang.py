import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dappled import (
    BrickWangTile,
    ConditionSet,
    EdgeColorSet,
    Tiling,
    WangTiling,
    classify,
    dapple,
    is_valid_wang,
    wang_from_dappled,
)
from dappled.errors import InvalidInput, NotInW
from dappled.wang import completions


def test_classify():
    assert classify(BrickWangTile(0, 1, 0, 2)) == 0
    assert classify(BrickWangTile(0, 1, 2, 1)) == 1


def test_cross_rejected():
    with pytest.raises(NotInW):
        classify(BrickWangTile(0, 1, 0, 1))


def test_no_seam_rejected():
    with pytest.raises(NotInW):
        classify(BrickWangTile(0, 1, 2, 0))


def test_color_set():
    with pytest.raises(InvalidInput):
        EdgeColorSet(1)
    assert list(EdgeColorSet(3)) == [0, 1, 2]


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_completion_count(k):
    # brute-force count of (c3, c4) that complete a fixed (c1, c2)
    for c1, c2 in itertools.product(range(k), repeat=2):
        brute = sum(
            (c1 == c3) != (c2 == c4) for c3 in range(k) for c4 in range(k)
        )
        assert brute == 2 * (k - 1)
        assert len(completions(c1, c2, k)) == brute


def test_single_cell():
    for seed in range(20):
        tau = wang_from_dappled(Tiling.from_rows([[0]]), 2, seed)
        w = tau[0, 0]
        assert w.c3 == w.c1 and w.c4 != w.c2
        assert is_valid_wang(tau) == (True, [])


def test_single_vertical_cell():
    tau = wang_from_dappled(Tiling.from_rows([[1]]), 3, 7)
    w = tau[0, 0]
    assert w.c4 == w.c2 and w.c3 != w.c1


def test_rejects_more_tiles():
    with pytest.raises(InvalidInput):
        wang_from_dappled(Tiling.from_rows([[0, 2]]), 3, 0)


def test_tampered_edge():
    rng = random.Random(0)
    f = Tiling(5, 4, tuple(rng.randrange(2) for _ in range(20)))
    tau = wang_from_dappled(f, 3, 1)
    w = tau[2, 1]
    # move the right edge to another colour, keeping the tile a brick
    if classify(w) == 0:
        new = BrickWangTile((w.c1 + 1) % 3, w.c2, (w.c1 + 1) % 3, w.c4)
        expected = [("H", (1, 1), (2, 1)), ("H", (2, 1), (3, 1))]
    else:
        c3 = next(c for c in range(3) if c not in (w.c1, w.c3))
        new = BrickWangTile(w.c1, w.c2, c3, w.c4)
        expected = [("H", (2, 1), (3, 1))]
    tiles = list(tau.tiles)
    tiles[1 * 5 + 2] = new
    ok, bad = is_valid_wang(WangTiling(5, 4, 3, tuple(tiles)))
    assert not ok and bad == expected


def test_single_broken_seam():
    tau = WangTiling(2, 1, 3, (BrickWangTile(0, 0, 1, 0), BrickWangTile(2, 1, 0, 1)))
    ok, bad = is_valid_wang(tau)
    assert not ok and bad == [("H", (0, 0), (1, 0))]


def test_single_tile_any_brick():
    for c in itertools.product(range(3), repeat=4):
        w = BrickWangTile(*c)
        if w.is_brick():
            assert is_valid_wang(WangTiling(1, 1, 3, (w,)))[0]


def test_non_brick_reported():
    tau = WangTiling(1, 1, 2, (BrickWangTile(0, 0, 0, 0),))
    assert is_valid_wang(tau) == (False, [("tile", (0, 0))])


def _max_runs(labels: Tiling, tile: int, axis: str) -> int:
    best = 0
    rows = labels.rows() if axis == "H" else [list(c) for c in zip(*labels.rows())]
    for r in rows:
        run = 0
        for x in r:
            run = run + 1 if x == tile else 0
            best = max(best, run)
    return best


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.integers(1, 8), st.integers(2, 5), st.integers(2, 4),
       st.integers(2, 4), st.integers(0, 10**6))
def test_construction_properties(m, n, k, p, q, seed):
    rng = random.Random(seed)
    L = ConditionSet.of((0, "H", p), (1, "V", q))
    f, _ = dapple(Tiling(m, n, tuple(rng.randrange(2) for _ in range(m * n))), L)
    tau = wang_from_dappled(f, k, seed)
    assert is_valid_wang(tau)[0]
    labels = tau.labels()
    assert labels.cells == f.cells
    assert _max_runs(labels, 0, "H") <= p
    assert _max_runs(labels, 1, "V") <= q
    assert all(0 <= c < k for w in tau.tiles for c in w.edges)


def test_deterministic():
    f = Tiling.from_rows([[0, 1, 1], [1, 0, 0]])
    assert wang_from_dappled(f, 3, 5) == wang_from_dappled(f, 3, 5)
    assert any(wang_from_dappled(f, 3, 5) != wang_from_dappled(f, 3, s) for s in range(6, 10))


def test_json_round_trip():
    f = Tiling.from_rows([[0, 1, 1], [1, 0, 0]])
    tau = wang_from_dappled(f, 4, 2)
    import json

    data = json.loads(tau.to_json(seed=2))
    assert data["m"] == 3 and data["n"] == 2 and data["C"] == 4 and data["seed"] == 2
    assert WangTiling.from_dict(data) == tau


def test_from_dict_rejects_bad_colour():
    with pytest.raises(InvalidInput):
        WangTiling.from_dict({"m": 1, "n": 1, "C": 2, "tiles": [[0, 0, 0, 5]]})
