"""Brick Wang tiles.

A tile is four edge colours ``(c1, c2, c3, c4)`` read as left, top, right,
bottom. Colours stand for positions of the brick seam along an edge. A brick
tile has exactly one straight seam running through it: horizontal when
``c1 == c3`` (label 0), vertical when ``c2 == c4`` (label 1). A tile where both
hold would be a cross and is not allowed; neither holding is not a brick.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Tiling
from .errors import InvalidInput, NotInW
from .rng import GENERATOR, stream

HORIZONTAL = 0
VERTICAL = 1


@dataclass(frozen=True)
class EdgeColorSet:
    size: int

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 2:
            raise InvalidInput(f"need at least 2 edge colours, got {self.size!r}")

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(range(self.size))


@dataclass(frozen=True)
class BrickWangTile:
    c1: int  # left
    c2: int  # top
    c3: int  # right
    c4: int  # bottom

    @property
    def edges(self) -> tuple[int, int, int, int]:
        return self.c1, self.c2, self.c3, self.c4

    def is_brick(self) -> bool:
        return (self.c1 == self.c3) != (self.c2 == self.c4)


def classify(w: BrickWangTile) -> int:
    """0 for a horizontal seam (c1 == c3), 1 for a vertical one (c2 == c4)."""
    h, v = w.c1 == w.c3, w.c2 == w.c4
    if h == v:
        kind = "cross" if h else "no straight seam"
        raise NotInW(f"{w.edges} is not a brick tile ({kind})")
    return HORIZONTAL if h else VERTICAL


@dataclass(frozen=True)
class WangTiling:
    m: int
    n: int
    colors: int
    tiles: tuple[BrickWangTile, ...]

    def __post_init__(self):
        if len(self.tiles) != self.m * self.n:
            raise InvalidInput(f"expected {self.m * self.n} tiles, got {len(self.tiles)}")

    def __getitem__(self, cell) -> BrickWangTile:
        i, j = cell
        return self.tiles[j * self.m + i]

    def labels(self) -> Tiling:
        return Tiling(self.m, self.n, tuple(classify(w) for w in self.tiles))

    def to_dict(self, seed: int | None = None) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "C": self.colors,
            "tiles": [list(w.edges) for w in self.tiles],
        }
        out["generator"] = GENERATOR
        if seed is not None:
            out["seed"] = int(seed)
        return out

    def to_json(self, seed: int | None = None) -> str:
        return json.dumps(self.to_dict(seed), indent=None, separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "WangTiling":
        try:
            m, n, k = int(data["m"]), int(data["n"]), int(data["C"])
            tiles = tuple(BrickWangTile(*map(int, t)) for t in data["tiles"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed Wang tiling: {exc}") from exc
        for w in tiles:
            if any(not 0 <= c < k for c in w.edges):
                raise InvalidInput(f"tile {w.edges} uses a colour outside 0..{k - 1}")
        return cls(m, n, k, tiles)


def wang_from_dappled(f: Tiling, colors: EdgeColorSet | int, seed: int = 0) -> WangTiling:
    """Brick Wang tiling whose seam directions follow ``f``.

    Cells are filled row by row. Left and top edges copy the neighbour's
    right and bottom edges (random on the outer boundary). A 0 cell carries
    the seam straight across and picks a new bottom colour; a 1 cell carries
    it straight down and picks a new right colour.
    """
    if isinstance(colors, int):
        colors = EdgeColorSet(colors)
    if len(f.tiles) != 2 or any(c not in (0, 1) for c in f.cells):
        raise InvalidInput("Wang construction needs a two-tile tiling")
    k = colors.size
    m, n = f.m, f.n
    rng = stream(seed, "wang", m, n, k)
    tiles: list[BrickWangTile] = []

    def other(c: int) -> int:
        # uniform over C minus {c}
        x = rng.randrange(k - 1)
        return x + (x >= c)

    for j in range(n):
        for i in range(m):
            c1 = tiles[-1].c3 if i > 0 else rng.randrange(k)
            c2 = tiles[(j - 1) * m + i].c4 if j > 0 else rng.randrange(k)
            if f.cells[j * m + i] == HORIZONTAL:
                w = BrickWangTile(c1, c2, c1, other(c2))
            else:
                w = BrickWangTile(c1, c2, other(c1), c2)
            tiles.append(w)
    return WangTiling(m, n, k, tuple(tiles))


def is_valid_wang(tau: WangTiling) -> tuple[bool, list]:
    """Check brick membership and every interior shared edge.

    Offenders are ``("tile", cell)`` for non-brick tiles and
    ``("H", left_cell, right_cell)`` / ``("V", upper_cell, lower_cell)`` for
    mismatched edges, in row-major order.
    """
    bad: list = []
    m = tau.m
    for j in range(tau.n):
        for i in range(m):
            w = tau.tiles[j * m + i]
            if not w.is_brick():
                bad.append(("tile", (i, j)))
            if i > 0 and w.c1 != tau.tiles[j * m + i - 1].c3:
                bad.append(("H", (i - 1, j), (i, j)))
            if j > 0 and w.c2 != tau.tiles[(j - 1) * m + i].c4:
                bad.append(("V", (i, j - 1), (i, j)))
    return not bad, bad


def completions(c1: int, c2: int, colors: int) -> list[tuple[int, int]]:
    """Every ``(c3, c4)`` that makes ``(c1, c2, c3, c4)`` a brick tile."""
    return [
        (c3, c4)
        for c3 in range(colors)
        for c4 in range(colors)
        if BrickWangTile(c1, c2, c3, c4).is_brick()
    ]


__all__ = [
    "BrickWangTile",
    "EdgeColorSet",
    "HORIZONTAL",
    "VERTICAL",
    "WangTiling",
    "classify",
    "completions",
    "is_valid_wang",
    "wang_from_dappled",
]
