"""Grid, tile alphabet, tiling and condition-set model plus violation detection.

Cells are addressed ``(i, j)`` with ``i`` the column (0..m-1, left to right)
and ``j`` the row (0..n-1, top to bottom). Storage is row-major, so cell
``(i, j)`` lives at flat index ``j * m + i``.

A condition ``H^p_t`` forbids ``p + 1`` consecutive copies of tile ``t`` in a
row; ``V^q_t`` does the same in a column. A violation is reported at the cell
where the offending run ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidConditions, InvalidInput, InvalidShape, MismatchedShapes

INF = math.inf

Cell = tuple[int, int]


@dataclass(frozen=True)
class TileSet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(str(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(symbols) < 2:
            raise InvalidInput("a tile set needs at least two tiles")
        if len(set(symbols)) != len(symbols):
            raise InvalidInput(f"duplicate tile symbols in {symbols}")
        for s in symbols:
            if not s or any(c.isspace() for c in s) or not s.isprintable():
                raise InvalidInput(f"tile symbol {s!r} must be printable without whitespace")

    @classmethod
    def of_size(cls, k: int) -> "TileSet":
        return cls(tuple(str(t) for t in range(k)))

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(str(symbol))
        except ValueError:
            raise InvalidInput(f"unknown tile symbol {symbol!r}; tiles are {self.symbols}") from None


BINARY = TileSet(("0", "1"))


@dataclass(frozen=True)
class Tiling:
    """An immutable ``m x n`` tiling; ``cells`` is row-major."""

    m: int
    n: int
    cells: tuple[int, ...]
    tiles: TileSet = BINARY

    def __post_init__(self):
        cells = tuple(map(int, self.cells))
        object.__setattr__(self, "cells", cells)
        if self.m < 1 or self.n < 1:
            raise InvalidShape(f"grid must be at least 1x1, got {self.m}x{self.n}")
        if len(cells) != self.m * self.n:
            raise InvalidInput(f"expected {self.m * self.n} cells, got {len(cells)}")
        k = len(self.tiles)
        if min(cells) < 0 or max(cells) >= k:
            raise InvalidInput(f"tile indices must lie in 0..{k - 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], tiles: TileSet | None = None) -> "Tiling":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InvalidShape("empty tiling")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise InvalidInput("ragged rows")
        if tiles is None:
            k = max(2, max(max(r) for r in rows) + 1)
            tiles = TileSet.of_size(k)
        return cls(m, len(rows), tuple(c for r in rows for c in r), tiles)

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def rows(self) -> list[list[int]]:
        m = self.m
        return [list(self.cells[j * m:(j + 1) * m]) for j in range(self.n)]

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError(cell)
        return self.cells[j * self.m + i]

    def get(self, i: int, j: int) -> int | None:
        """Tile at (i, j), or None outside the grid (never equal to a tile)."""
        if 0 <= i < self.m and 0 <= j < self.n:
            return self.cells[j * self.m + i]
        return None

    def with_cells(self, writes: Iterable[tuple[Cell, int]]) -> "Tiling":
        cells = list(self.cells)
        for (i, j), t in writes:
            cells[j * self.m + i] = t
        return Tiling(self.m, self.n, tuple(cells), self.tiles)

    def repeat(self, k: int, l: int) -> "Tiling":
        """Tile this pattern k times horizontally and l times vertically."""
        if k < 1 or l < 1:
            raise InvalidInput("repeat factors must be positive")
        rows = [r * k for r in self.rows()] * l
        return Tiling.from_rows(rows, self.tiles)

    def symbol_rows(self) -> list[list[str]]:
        return [[self.tiles.symbols[c] for c in r] for r in self.rows()]


def weight(cell: Cell) -> int:
    i, j = cell
    return i + j


def _check_bound(b) -> float | int:
    if isinstance(b, str):
        if b.strip().lower() in ("inf", "infinity", "∞"):
            return INF
        raise InvalidConditions(f"bad bound {b!r}")
    if b == INF:
        return INF
    if isinstance(b, bool) or int(b) != b:
        raise InvalidConditions(f"bound must be an integer or inf, got {b!r}")
    if b < 1:
        raise InvalidConditions(f"bound must be >= 1, got {b}")
    return int(b)


@dataclass(frozen=True)
class Condition:
    """``H^bound_tile`` or ``V^bound_tile``, optionally with a per-cell bound grid.

    ``bound_grid`` is indexed ``[j][i]`` (rows of the tiling) and overrides
    the scalar bound everywhere.
    """

    tile: int
    axis: str
    bound: float | int = INF
    bound_grid: tuple[tuple[float | int, ...], ...] | None = None

    def __post_init__(self):
        if self.axis not in ("H", "V"):
            raise InvalidConditions(f"axis must be 'H' or 'V', got {self.axis!r}")
        if not isinstance(self.tile, int) or self.tile < 0:
            raise InvalidConditions(f"tile must be a non-negative index, got {self.tile!r}")
        object.__setattr__(self, "bound", _check_bound(self.bound))
        if self.bound_grid is not None:
            grid = tuple(tuple(_check_bound(b) for b in row) for row in self.bound_grid)
            if not grid or not grid[0] or any(len(r) != len(grid[0]) for r in grid):
                raise InvalidConditions("bound grid must be a non-empty rectangle")
            object.__setattr__(self, "bound_grid", grid)

    def bound_at(self, i: int, j: int) -> float | int:
        if self.bound_grid is None:
            return self.bound
        return self.bound_grid[j][i]

    def min_bound(self) -> float | int:
        if self.bound_grid is None:
            return self.bound
        return min(min(r) for r in self.bound_grid)

    @property
    def per_cell(self) -> bool:
        return self.bound_grid is not None

    def grid_shape(self) -> tuple[int, int] | None:
        if self.bound_grid is None:
            return None
        return len(self.bound_grid[0]), len(self.bound_grid)

    def label(self, tiles: TileSet | None = None) -> str:
        t = tiles.symbols[self.tile] if tiles is not None else str(self.tile)
        b = "*" if self.per_cell else ("inf" if self.bound == INF else str(self.bound))
        return f"{self.axis}^{b}_{t}"

    def __str__(self) -> str:
        return self.label()


def _merge(a: Condition, b: Condition) -> Condition:
    if not a.per_cell and not b.per_cell:
        return Condition(a.tile, a.axis, min(a.bound, b.bound))
    shape = a.grid_shape() or b.grid_shape()
    if a.per_cell and b.per_cell and a.grid_shape() != b.grid_shape():
        raise MismatchedShapes("per-cell bound grids of different shapes for the same condition")
    m, n = shape
    grid = tuple(
        tuple(min(a.bound_at(i, j), b.bound_at(i, j)) for i in range(m)) for j in range(n)
    )
    return Condition(a.tile, a.axis, INF, grid)


@dataclass(frozen=True)
class ConditionSet:
    """A set ``L`` of conditions; ``cyclic`` reads every condition modulo the grid.

    Duplicate (tile, axis) entries are merged by taking the cell-wise minimum
    bound, keeping the position of the first occurrence.
    """

    conditions: tuple[Condition, ...] = ()
    cyclic: bool = False
    tiles: TileSet | None = field(default=None, compare=False)

    def __post_init__(self):
        merged: dict[tuple[int, str], Condition] = {}
        for c in self.conditions:
            key = (c.tile, c.axis)
            merged[key] = _merge(merged[key], c) if key in merged else c
        object.__setattr__(self, "conditions", tuple(merged.values()))
        if self.tiles is not None:
            for c in self.conditions:
                if c.tile >= len(self.tiles):
                    raise InvalidConditions(f"condition on tile {c.tile} outside the tile set")

    @classmethod
    def of(cls, *specs: tuple[int, str, float | int], cyclic: bool = False,
           tiles: TileSet | None = None) -> "ConditionSet":
        """Shorthand: ``ConditionSet.of((0, "H", 2), (1, "V", 2))``."""
        return cls(tuple(Condition(t, a, b) for t, a, b in specs), cyclic, tiles)

    def __iter__(self):
        return iter(self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)

    def get(self, tile: int, axis: str) -> Condition | None:
        for c in self.conditions:
            if c.tile == tile and c.axis == axis:
                return c
        return None

    def horizontal(self) -> list[Condition]:
        return [c for c in self.conditions if c.axis == "H"]

    def vertical(self) -> list[Condition]:
        return [c for c in self.conditions if c.axis == "V"]

    def min_bound(self) -> float | int:
        return min((c.min_bound() for c in self.conditions), default=INF)

    def check_shape(self, m: int, n: int) -> None:
        for c in self.conditions:
            shape = c.grid_shape()
            if shape is not None and shape != (m, n):
                raise MismatchedShapes(
                    f"bound grid of {c} is {shape[0]}x{shape[1]}, tiling is {m}x{n}"
                )

    def bound_tables(self, m: int, n: int, ntiles: int) -> tuple[list[list], list[list]]:
        """Flat per-tile bound arrays ``(hb, vb)``; ``hb[t][j*m+i]`` is the H bound."""
        self.check_shape(m, n)
        hb = [[INF] * (m * n) for _ in range(ntiles)]
        vb = [[INF] * (m * n) for _ in range(ntiles)]
        for c in self.conditions:
            if c.tile >= ntiles:
                continue
            table = (hb if c.axis == "H" else vb)[c.tile]
            for j in range(n):
                for i in range(m):
                    table[j * m + i] = c.bound_at(i, j)
        return hb, vb

    def with_cyclic(self, cyclic: bool) -> "ConditionSet":
        return ConditionSet(self.conditions, cyclic, self.tiles)


@dataclass(frozen=True)
class ViolationReport:
    cell: Cell
    condition: Condition
    run_start: Cell


def _run_violation(f: Tiling, cell: Cell, c: Condition, wrap: bool) -> ViolationReport | None:
    i, j = cell
    t = c.tile
    b = c.bound_at(i, j)
    if b == INF or f.cells[j * f.m + i] != t:
        return None
    horizontal = c.axis == "H"
    period = f.m if horizontal else f.n
    pos = i if horizontal else j
    if wrap:
        if b >= period:
            raise InvalidShape(f"cyclic {c} needs the period to exceed the bound ({period} <= {b})")
    elif pos < b:
        return None
    for k in range(1, b + 1):
        q = (pos - k) % period if wrap else pos - k
        other = f.cells[j * f.m + q] if horizontal else f.cells[q * f.m + i]
        if other != t:
            return None
    start = (pos - b) % period if wrap else pos - b
    return ViolationReport(cell, c, (start, j) if horizontal else (i, start))


def violations_at(f: Tiling, cell: Cell, L: ConditionSet, wrap: bool) -> list[ViolationReport]:
    """All violations ending at ``cell``; H conditions first, then V, each in listed order."""
    L.check_shape(f.m, f.n)
    i, j = cell
    if not (0 <= i < f.m and 0 <= j < f.n):
        raise IndexError(cell)
    out = []
    for c in L.horizontal() + L.vertical():
        r = _run_violation(f, cell, c, wrap)
        if r is not None:
            out.append(r)
    return out


def violates(f: Tiling, cell: Cell, L: ConditionSet) -> ViolationReport | None:
    """First condition of a non-cyclic ``L`` violated at ``cell``, or None.

    Cells outside the grid never match a tile, so runs stop at the border.
    """
    if L.cyclic:
        raise InvalidConditions("cyclic condition set; use dappled.cyclic.violates_cyclic")
    found = violations_at(f, cell, L, wrap=False)
    return found[0] if found else None


def find_violations(f: Tiling, L: ConditionSet) -> list[ViolationReport]:
    """Every (cell, condition) violation, scanning cells row-major."""
    if L.cyclic:
        return [
            r
            for j in range(f.n)
            for i in range(f.m)
            for r in violations_at(f, (i, j), L, wrap=True)
        ]
    L.check_shape(f.m, f.n)
    m, n, cells = f.m, f.n, f.cells
    found: list[tuple[int, int, ViolationReport]] = []
    ordered = L.horizontal() + L.vertical()
    for rank, c in enumerate(ordered):
        t, grid = c.tile, c.per_cell
        if c.min_bound() == INF:
            continue
        lines = (
            [[(i, j) for i in range(m)] for j in range(n)]
            if c.axis == "H"
            else [[(i, j) for j in range(n)] for i in range(m)]
        )
        for line in lines:
            run = 0
            for pos, (i, j) in enumerate(line):
                run = run + 1 if cells[j * m + i] == t else 0
                b = c.bound_at(i, j) if grid else c.bound
                if run > b:
                    start = line[pos - b]
                    found.append((j * m + i, rank, ViolationReport((i, j), c, start)))
    found.sort(key=lambda x: (x[0], x[1]))
    return [r for _, _, r in found]


def is_dappled(f: Tiling, L: ConditionSet) -> tuple[bool, list[ViolationReport]]:
    """``(True, [])`` if ``f`` satisfies every condition of ``L`` (cyclically if flagged)."""
    found = find_violations(f, L)
    return not found, found
