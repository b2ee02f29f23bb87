"""Weight-ordered local-surgery repair of a tiling into a dappled one.

Cells are visited by increasing weight ``i + j``, ties by increasing ``i``.
At a violating cell holding tile ``t`` (two-tile case):

* flip: write ``1 - t`` if that clears every violation at the cell;
* rewrite: otherwise copy the upper-left diagonal neighbour into the cell
  and write its complement into the left and upper neighbours.

With more than two tiles a violating cell simply receives the smallest tile
index that differs from both its left and upper neighbours.

Violation checks use per-cell counters of equal tiles ending at a cell,
horizontally and vertically, kept up to date for every visited cell.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .core import Cell, ConditionSet, Tiling, violates, weight
from .errors import InternalError, InvalidConditions, MismatchedShapes

FLIP = "flip"
SURGERY = "surgery"
MULTI = "multi-choice"


@dataclass(frozen=True)
class TraceEntry:
    cell: Cell
    action: str
    writes: tuple[tuple[Cell, int], ...]

    def to_dict(self) -> dict:
        return {
            "cell": list(self.cell),
            "action": self.action,
            "writes": [[i, j, t] for (i, j), t in self.writes],
        }


@dataclass
class DappleTrace:
    entries: list[TraceEntry] = field(default_factory=list)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def to_json(self) -> str:
        return json.dumps([e.to_dict() for e in self.entries], indent=1)


@lru_cache(maxsize=64)
def visit_order(m: int, n: int) -> tuple[Cell, ...]:
    """Cells by increasing weight, ties by increasing column."""
    order = []
    for w in range(m + n - 1):
        for i in range(max(0, w - n + 1), min(w, m - 1) + 1):
            order.append((i, w - i))
    return tuple(order)


@lru_cache(maxsize=64)
def _ranks(m: int, n: int) -> tuple[int, ...]:
    rank = [0] * (m * n)
    for r, (i, j) in enumerate(visit_order(m, n)):
        rank[j * m + i] = r
    return tuple(rank)


@lru_cache(maxsize=256)
def _tables(L: ConditionSet, m: int, n: int, ntiles: int):
    hb, vb = L.bound_tables(m, n, ntiles)
    return tuple(map(tuple, hb)), tuple(map(tuple, vb))


# limits(i, j, t) -> (max horizontal run, max vertical run) for tile t at (i, j)
Limits = Callable[[int, int, int], tuple]


class Sweep:
    """Mutable repair state over a flat row-major grid.

    ``limits`` gives the effective bounds at a cell; it may read ``self.g``
    (the cyclic schedule does). Counters are valid for visited cells only.
    """

    def __init__(self, cells, m: int, n: int, ntiles: int, limits: Limits | None = None,
                 tables: tuple[list, list] | None = None, order: tuple[Cell, ...] | None = None):
        self.g = list(cells)
        self.m, self.n = m, n
        self.ntiles = ntiles
        self.limits = limits
        self.tables = tables
        self.hrun = [0] * (m * n)
        self.vrun = [0] * (m * n)
        if order is None:
            self.order, self.rank = visit_order(m, n), _ranks(m, n)
        else:
            self.order = tuple(order)
            rank = [0] * (m * n)
            for r, (i, j) in enumerate(self.order):
                rank[j * m + i] = r
            self.rank = tuple(rank)
        self.cur = -1
        self.trace = DappleTrace()
        self.on_action: Callable[[Cell, list[int]], None] | None = None

    def refresh(self, i: int, j: int) -> None:
        m, g, hrun, vrun, rank, cur = self.m, self.g, self.hrun, self.vrun, self.rank, self.cur
        stack = [(i, j)]
        while stack:
            i, j = stack.pop()
            if i >= m or j >= self.n:
                continue
            idx = j * m + i
            if rank[idx] > cur:
                continue
            t = g[idx]
            hrun[idx] = hrun[idx - 1] + 1 if i > 0 and g[idx - 1] == t else 1
            vrun[idx] = vrun[idx - m] + 1 if j > 0 and g[idx - m] == t else 1
            stack.append((i, j + 1))
            stack.append((i + 1, j))

    def violating(self, i: int, j: int) -> bool:
        idx = j * self.m + i
        t = self.g[idx]
        if self.tables is not None:
            return self.hrun[idx] > self.tables[0][t][idx] or self.vrun[idx] > self.tables[1][t][idx]
        hb, vb = self.limits(i, j, t)
        return self.hrun[idx] > hb or self.vrun[idx] > vb

    def write(self, i: int, j: int, t: int) -> None:
        self.g[j * self.m + i] = t

    def repair(self, i: int, j: int) -> TraceEntry:
        """Fix a violating visited cell; returns the trace entry."""
        m, g = self.m, self.g
        idx = j * m + i
        before = list(g) if self.on_action is not None else None
        if self.ntiles > 2:
            avoid = set()
            if i > 0:
                avoid.add(g[idx - 1])
            if j > 0:
                avoid.add(g[idx - m])
            t = min(x for x in range(self.ntiles) if x not in avoid)
            self.write(i, j, t)
            self.refresh(i, j)
            entry = TraceEntry((i, j), MULTI, (((i, j), t),))
        else:
            self.write(i, j, 1 - g[idx])
            self.refresh(i, j)
            if not self.violating(i, j):
                entry = TraceEntry((i, j), FLIP, (((i, j), g[idx]),))
            else:
                if i < 1 or j < 1:
                    raise InternalError(f"surgery requested at border cell {(i, j)}")
                s = g[idx - m - 1]
                self.write(i - 1, j, 1 - s)
                self.write(i, j - 1, 1 - s)
                self.write(i, j, s)
                self.refresh(i - 1, j)
                self.refresh(i, j - 1)
                self.refresh(i, j)
                entry = TraceEntry(
                    (i, j), SURGERY, (((i, j), s), ((i - 1, j), 1 - s), ((i, j - 1), 1 - s))
                )
        if self.violating(i, j):
            raise InternalError(f"repair left a violation at {(i, j)}")
        self.trace.entries.append(entry)
        if self.on_action is not None:
            self.on_action((i, j), before)
        return entry

    def step(self) -> Cell:
        """Visit the next cell in order, repairing it if needed."""
        self.cur += 1
        i, j = self.order[self.cur]
        # right and lower neighbours are unvisited, so no propagation is needed
        m, g = self.m, self.g
        idx = j * m + i
        t = g[idx]
        self.hrun[idx] = self.hrun[idx - 1] + 1 if i > 0 and g[idx - 1] == t else 1
        self.vrun[idx] = self.vrun[idx - m] + 1 if j > 0 and g[idx - m] == t else 1
        if self.violating(i, j):
            self.repair(i, j)
        return i, j

    def run(self) -> None:
        if self.tables is None or self.on_action is not None:
            while self.cur + 1 < len(self.order):
                self.step()
            return
        # hot path for fixed bound tables; same logic as step()
        m, g, hrun, vrun = self.m, self.g, self.hrun, self.vrun
        hb, vb = self.tables
        for r in range(self.cur + 1, len(self.order)):
            self.cur = r
            i, j = self.order[r]
            idx = j * m + i
            t = g[idx]
            h = hrun[idx] = hrun[idx - 1] + 1 if i > 0 and g[idx - 1] == t else 1
            v = vrun[idx] = vrun[idx - m] + 1 if j > 0 and g[idx - m] == t else 1
            if h > hb[t][idx] or v > vb[t][idx]:
                self.repair(i, j)


def _validate(f: Tiling, L: ConditionSet) -> None:
    if L.cyclic:
        raise InvalidConditions("dapple needs a non-cyclic condition set; use dapple_cyclic")
    L.check_shape(f.m, f.n)
    for c in L:
        if c.tile >= len(f.tiles):
            raise InvalidConditions(f"{c} refers to a tile outside {f.tiles.symbols}")
        if c.min_bound() < 2:
            raise InvalidConditions(
                f"{c.label(f.tiles)} has a bound below 2; repair is not guaranteed"
            )


def dapple(f: Tiling, L: ConditionSet, *, check: bool = False) -> tuple[Tiling, DappleTrace]:
    """Repair ``f`` into an ``L``-dappled tiling.

    Already dappled input is returned unchanged. With ``check=True`` every
    repair is followed by :func:`assert_no_regression` (slow; for debugging).
    """
    _validate(f, L)
    m, n = f.m, f.n
    sweep = Sweep(f.cells, m, n, len(f.tiles), tables=_tables(L, m, n, len(f.tiles)))
    if check:
        def on_action(cell, before):
            ok = assert_no_regression(
                Tiling(m, n, tuple(before), f.tiles), Tiling(m, n, tuple(sweep.g), f.tiles), cell, L
            )
            if not ok:
                raise InternalError(f"repair at {cell} introduced an earlier violation")
        sweep.on_action = on_action
    sweep.run()
    return Tiling(m, n, tuple(sweep.g), f.tiles), sweep.trace


def assert_no_regression(g_before: Tiling, g_after: Tiling, cell: Cell, L: ConditionSet) -> bool:
    """True iff the repair at ``cell`` left no violation among cells of weight <= weight(cell).

    Only new violations count, plus any left at ``cell`` itself: a cell of
    the same weight that comes later in the visit order may already be
    violating before the repair, and is handled when its turn comes.
    """
    if g_before.shape != g_after.shape:
        raise MismatchedShapes(f"{g_before.shape} != {g_after.shape}")
    w = weight(cell)
    for j in range(g_after.n):
        for i in range(min(g_after.m, w - j + 1)):
            if violates(g_after, (i, j), L) is None:
                continue
            if (i, j) == cell or violates(g_before, (i, j), L) is None:
                return False
    return True


__all__ = [
    "DappleTrace",
    "TraceEntry",
    "Sweep",
    "assert_no_regression",
    "dapple",
    "visit_order",
]
