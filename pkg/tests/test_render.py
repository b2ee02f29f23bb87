import random
import re

import pytest

from dappled import BrickWangTile, ConditionSet, TileSet, Tiling, WangTiling, dapple, wang_from_dappled
from dappled.errors import InvalidWang, PaletteMismatch
from dappled.render import (
    CELL,
    offset,
    render_tiling_ppm,
    render_tiling_svg,
    render_wang_ppm,
    render_wang_svg,
    wang_segments,
)


def _wang(m=10, n=6, k=3, seed=0):
    rng = random.Random(seed)
    f = Tiling(m, n, tuple(rng.randrange(2) for _ in range(m * n)))
    f, _ = dapple(f, ConditionSet.of((0, "H", 2), (1, "V", 2)))
    return wang_from_dappled(f, k, seed)


def test_single_rect():
    svg = render_tiling_svg(Tiling.from_rows([[1]]), ["#fff", "#000"])
    assert svg.count("<rect") == 1
    assert 'fill="#000"' in svg and f'width="{CELL}"' in svg


def test_tiling_svg_stable():
    f = Tiling.from_rows([[0, 1, 1], [1, 0, 0]])
    assert render_tiling_svg(f) == render_tiling_svg(f)
    assert render_tiling_svg(f).count("<rect") == 6


def test_named_palette():
    f = Tiling.from_rows([[0, 1]], TileSet(("a", "b")))
    svg = render_tiling_svg(f, {"a": "red", "b": "blue"})
    assert svg.index('fill="red"') < svg.index('fill="blue"')


@pytest.mark.parametrize("palette", [["#fff"], ["#fff", "#000", "#111"], {"0": "#fff", "x": "#000"}])
def test_palette_mismatch(palette):
    with pytest.raises(PaletteMismatch):
        render_tiling_svg(Tiling.from_rows([[0, 1]]), palette)


def test_ppm_needs_hex():
    with pytest.raises(PaletteMismatch):
        render_tiling_ppm(Tiling.from_rows([[0, 1]]), ["red", "blue"])


def test_tiling_ppm_layout():
    data = render_tiling_ppm(Tiling.from_rows([[0, 1, 0], [1, 1, 0]]), ["#000000", "#ff0000"], scale=4)
    head = b"P6\n12 8\n255\n"
    assert data.startswith(head) and len(data) == len(head) + 12 * 8 * 3
    px = data[len(head):]
    assert px[0:3] == b"\0\0\0"
    assert px[4 * 3:4 * 3 + 3] == b"\xff\0\0"


def test_single_horizontal_tile():
    tau = WangTiling(1, 1, 3, (BrickWangTile(1, 0, 1, 2),))
    segs = wang_segments(tau)
    trav = [s for s in segs if s.kind == "traverse"]
    assert len(trav) == 1
    t = trav[0]
    assert (t.x1, t.x2) == (0, CELL) and t.y1 == t.y2 == offset(1, 3)
    assert render_wang_svg(tau).count('class="traverse"') == 1


def _edge_points(tau):
    """Where each tile's seams meet its four edges, in absolute coordinates."""
    k = tau.colors
    pts = {}
    for j in range(tau.n):
        for i in range(tau.m):
            w = tau[i, j]
            x0, y0 = i * CELL, j * CELL
            pts[i, j] = {
                "left": (x0, y0 + offset(w.c1, k)),
                "top": (x0 + offset(w.c2, k), y0),
                "right": (x0 + CELL, y0 + offset(w.c3, k)),
                "bottom": (x0 + offset(w.c4, k), y0 + CELL),
            }
    return pts


@pytest.mark.parametrize("seed", range(5))
def test_seams_continue(seed):
    tau = _wang(seed=seed)
    pts = _edge_points(tau)
    ends = set()
    for s in wang_segments(tau):
        ends.add((s.x1, s.y1))
        ends.add((s.x2, s.y2))
    for (i, j), p in pts.items():
        # every edge point is reached by a drawn seam
        assert all(v in ends for v in p.values())
        if i + 1 < tau.m:
            assert p["right"] == pts[i + 1, j]["left"]
        if j + 1 < tau.n:
            assert p["bottom"] == pts[i, j + 1]["top"]


def test_wang_svg_stable():
    tau = _wang(seed=3)
    a, b = render_wang_svg(tau, "seed=3"), render_wang_svg(tau, "seed=3")
    assert a == b
    assert len(re.findall(r"<line ", a)) == 3 * 60


def test_tampered_rejected():
    tau = _wang(seed=1)
    w = tau[0, 0]
    bad = WangTiling(tau.m, tau.n, tau.colors, (BrickWangTile(0, 0, 0, 0),) + tau.tiles[1:])
    assert w != bad[0, 0]
    with pytest.raises(InvalidWang):
        render_wang_svg(bad)
    with pytest.raises(InvalidWang):
        render_wang_ppm(bad)


def test_wang_ppm_size():
    tau = _wang(4, 3, seed=2)
    data = render_wang_ppm(tau)
    head = f"P6\n{4 * CELL} {3 * CELL}\n255\n".encode()
    assert data.startswith(head) and len(data) == len(head) + 4 * CELL * 3 * CELL * 3
    assert data == render_wang_ppm(tau)
