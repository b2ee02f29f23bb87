"""Cyclic (tileable) dappling.

A cyclic condition reads run indices modulo the grid, so the output can be
repeated to fill a larger region seamlessly. Repair reuses the non-cyclic
sweep, but the bound at each visited cell comes from a stricter, position
dependent schedule. For a cyclic ``H^p_t`` at column ``i``:

* ``i < p - 2``: nothing is checked;
* ``i == p - 2``: ``H^(p-2)_t``, so one of columns ``0..p-2`` is not ``t``;
* ``i == m - 1``: ``H^(p-k)_t`` where ``k`` is the length of the leading
  run of ``t`` in the row, closing the seam;
* otherwise ``H^p_t``.

Vertical conditions use the same rules on rows. Two tiles only, and every
bound must be at least 3, except for the ``{H^p_0, V^q_1}`` shape, which
:func:`dapple_cyclic_p2` handles down to ``p = q = 2`` by first turning the
first two rows and columns into a draughtboard.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import INF, Cell, Condition, ConditionSet, Tiling, ViolationReport, violations_at
from .dappler import Sweep
from .errors import InternalError, InvalidConditions, InvalidInput, InvalidShape

# schedule variants: where the first stricter check sits relative to p
STANDARD = 2  # early check H^(p-2) at i == p - 2
BORDERED = 1  # early check H^(p-1) at i == p - 1


def violates_cyclic(f: Tiling, cell: Cell, L: ConditionSet) -> ViolationReport | None:
    """First condition violated at ``cell`` with indices taken modulo the grid."""
    found = violations_at(f, cell, L, wrap=True)
    return found[0] if found else None


def is_cyclically_dappled(f: Tiling, L: ConditionSet) -> bool:
    return all(
        violates_cyclic(f, (i, j), L) is None for j in range(f.n) for i in range(f.m)
    )


@dataclass(frozen=True)
class CyclicSchedule:
    """Effective non-cyclic bounds ``L(i, j)`` for a cyclic condition set.

    ``offset`` is 2 for the standard schedule and 1 for the bordered one.
    With ``strict`` set, the closing rule asserts its guarantees.
    """

    m: int
    n: int
    conditions: tuple[Condition, ...]
    offset: int = STANDARD
    strict: bool = True

    def _bound(self, c: Condition, pos: int, size: int, lead) -> float | int:
        p = c.bound
        if p == INF:
            return INF
        first = p - self.offset
        if pos < first:
            return INF
        if pos == first:
            return first
        if pos == size - 1:
            k = lead()
            if self.strict and (k > first or p - k < self.offset):
                raise InternalError(
                    f"closing rule for {c} found a leading run of {k} (limit {first})"
                )
            return p - k
        return p

    def bounds(self, g, i: int, j: int, t: int) -> tuple:
        """(H bound, V bound) for tile ``t`` at ``(i, j)`` given the current grid ``g``."""
        m = self.m
        hb = vb = INF
        for c in self.conditions:
            if c.tile != t:
                continue
            if c.axis == "H":
                def lead(c=c):
                    k = 0
                    while k < m and g[j * m + k] == c.tile:
                        k += 1
                    return k
                hb = min(hb, self._bound(c, i, m, lead))
            else:
                def lead(c=c):
                    k = 0
                    while k < self.n and g[k * m + i] == c.tile:
                        k += 1
                    return k
                vb = min(vb, self._bound(c, j, self.n, lead))
        return hb, vb

    def conditions_at(self, f: Tiling, cell: Cell) -> list[Condition]:
        """The non-cyclic conditions ``L(i, j)`` in force at ``cell`` (for inspection)."""
        i, j = cell
        out = []
        for c in self.conditions:
            hb, vb = self.bounds(f.cells, i, j, c.tile)
            b = hb if c.axis == "H" else vb
            if b != INF:
                out.append(Condition(c.tile, c.axis, b))
        return out


def _cyclic_conditions(f: Tiling, L: ConditionSet) -> tuple[Condition, ...]:
    if len(f.tiles) != 2:
        raise InvalidInput("cyclic dappling is defined for two tiles only")
    conds = []
    for c in L:
        if c.per_cell:
            raise InvalidConditions("per-cell bounds are not supported in cyclic mode")
        if c.tile >= 2:
            raise InvalidConditions(f"{c} refers to a tile outside {f.tiles.symbols}")
        if c.bound == INF:
            continue
        size = f.m if c.axis == "H" else f.n
        if size < c.bound + 1:
            raise InvalidShape(
                f"{c.label(f.tiles)} needs at least {c.bound + 1} cells along its axis, got {size}"
            )
        conds.append(c)
    return tuple(conds)


def is_p2_shape(L: ConditionSet) -> bool:
    """True for exactly one H condition on tile 0 and one V condition on tile 1."""
    return (
        len(L) == 2
        and L.get(0, "H") is not None
        and L.get(1, "V") is not None
    )


def bordered_order(m: int, n: int, right_corner_last: bool) -> tuple[Cell, ...]:
    """Visit order for the bordered sweep.

    Weight order, but the bottom-row cell of each diagonal goes last: the rewrite
    at ``(i, n-2)`` rewrites ``(i-1, n-2)`` and would otherwise invalidate a
    bound-1 seam check already passed at ``(i-1, n-1)``. The right-column
    cell has the mirror-image exposure, which only collides with the above on
    the diagonal through ``(m-2, n-1)`` and ``(m-1, n-2)``; there the cell
    whose seam bound can drop to 1 goes last.
    """
    order = []
    corner = m + n - 3
    for w in range(m + n - 1):
        diag = [(i, w - i) for i in range(max(0, w - n + 1), min(w, m - 1) + 1)]
        if len(diag) > 1 and diag[0][1] == n - 1 and not (w == corner and right_corner_last):
            diag = diag[1:] + diag[:1]
        order.extend(diag)
    return tuple(order)


def _sweep(f: Tiling, schedule: CyclicSchedule, order=None) -> Sweep:
    sweep = Sweep(f.cells, f.m, f.n, 2, limits=None, order=order)
    sweep.limits = lambda i, j, t: schedule.bounds(sweep.g, i, j, t)
    return sweep


def dapple_cyclic(f: Tiling, L: ConditionSet) -> Tiling:
    """Repair ``f`` into a cyclically dappled tiling.

    Needs every finite bound >= 3; a ``{H^p_0, V^q_1}`` set with a bound of
    2 is delegated to :func:`dapple_cyclic_p2`. The output may differ from
    ``f`` even when ``f`` is already cyclically dappled.
    """
    conds = _cyclic_conditions(f, L)
    low = [c for c in conds if c.bound < 3]
    if low:
        if is_p2_shape(L) and all(c.bound >= 2 for c in conds):
            return dapple_cyclic_p2(f, L)
        raise InvalidConditions(
            "cyclic bounds below 3 are only supported for {H^p_0, V^q_1}; got "
            + ", ".join(c.label(f.tiles) for c in low)
        )
    sweep = _sweep(f, CyclicSchedule(f.m, f.n, conds, STANDARD))
    sweep.run()
    return Tiling(f.m, f.n, tuple(sweep.g), f.tiles)


def border_conditions_hold(f: Tiling) -> bool:
    """Draughtboard border on the first two rows and columns.

    Rows 0 and 1 differ in every column and columns 0 and 1 in every row;
    row 0 and column 0 alternate within aligned pairs; and
    ``f(m-2, 0) == f(0, n-2)``.
    """
    m, n = f.m, f.n
    g = f.get
    if any(g(i, 0) == g(i, 1) for i in range(m)):
        return False
    if any(g(0, j) == g(1, j) for j in range(n)):
        return False
    if any(g(2 * k, 0) == g(2 * k + 1, 0) for k in range(m // 2)):
        return False
    if any(g(0, 2 * l) == g(0, 2 * l + 1) for l in range(n // 2)):
        return False
    return g(m - 2, 0) == g(0, n - 2)


def draughtboard_border(f: Tiling) -> Tiling:
    """Flip cells so the first two rows and columns form a draughtboard border.

    Order: row 0 pairs, row 1, column 0 pairs, column 1; in each violated pair
    the later cell is flipped. The column-0 pair holding ``(0, n-2)`` is set
    so that ``f(0, n-2) == f(m-2, 0)``.
    """
    m, n = f.m, f.n
    g = list(f.cells)

    def at(i, j):
        return g[j * m + i]

    def put(i, j, t):
        g[j * m + i] = t

    for k in range(m // 2):
        if at(2 * k + 1, 0) == at(2 * k, 0):
            put(2 * k + 1, 0, 1 - at(2 * k, 0))
    for i in range(m):
        if at(i, 1) == at(i, 0):
            put(i, 1, 1 - at(i, 0))
    target = at(m - 2, 0)
    for l in range(1, n // 2):
        lead, part = 2 * l, 2 * l + 1
        if lead == n - 2:
            if at(0, lead) != target:
                put(0, lead, target)
            if at(0, part) == at(0, lead):
                put(0, part, 1 - at(0, lead))
        elif part == n - 2:
            if at(0, lead) == target:
                put(0, lead, 1 - target)
            if at(0, part) != target:
                put(0, part, target)
        elif at(0, part) == at(0, lead):
            put(0, part, 1 - at(0, lead))
    for j in range(2, n):
        if at(1, j) == at(0, j):
            put(1, j, 1 - at(0, j))
    return Tiling(m, n, tuple(g), f.tiles)


def dapple_cyclic_p2(f: Tiling, L: ConditionSet) -> Tiling:
    """Cyclic dappling for ``{H^p_0, V^q_1}`` with bounds down to 2.

    The border pass makes the first two rows and columns a draughtboard;
    the sweep then runs with the first stricter check moved to ``p - 1``.
    """
    if not is_p2_shape(L):
        raise InvalidConditions("expected exactly {H^p_0, V^q_1}")
    h, v = L.get(0, "H"), L.get(1, "V")
    for c in (h, v):
        if c.per_cell:
            raise InvalidConditions("per-cell bounds are not supported in cyclic mode")
        if c.bound < 2:
            raise InvalidConditions(f"{c.label(f.tiles)}: bound must be at least 2")
    if f.m < 4 or f.n < 4:
        raise InvalidShape(f"the bordered variant needs at least a 4x4 grid, got {f.m}x{f.n}")
    conds = _cyclic_conditions(f, L)
    _check_p2_parity(f, h, v)
    start = draughtboard_border(f)
    # the border's corner match leaves at most one corner cell with a bound-1 seam check
    right_exposed = h.bound == 2 and start[0, f.n - 2] == 0
    order = bordered_order(f.m, f.n, right_corner_last=right_exposed)
    sweep = _sweep(start, CyclicSchedule(f.m, f.n, conds, BORDERED), order)
    sweep.run()
    return Tiling(f.m, f.n, tuple(sweep.g), f.tiles)


def _check_p2_parity(f: Tiling, h: Condition, v: Condition) -> None:
    # An odd period on a bound-2 axis leaves an unpaired border cell whose
    # seam repair can undo the draughtboard border. With both bounds 2 the
    # sweep repairs it consistently; with mixed bounds it does not.
    if h.bound == 2 and v.bound != 2 and f.m % 2:
        raise InvalidShape("H bound 2 with a larger V bound needs an even number of columns")
    if v.bound == 2 and h.bound != 2 and f.n % 2:
        raise InvalidShape("V bound 2 with a larger H bound needs an even number of rows")


@dataclass(frozen=True)
class NaiveEvent:
    """One repair of the naive sweep and the earlier cells it broke."""

    cell: Cell
    tiling: Tiling
    new_violations: tuple[Cell, ...]


def demonstrate_naive_failure(f: Tiling, L: ConditionSet, max_bounces: int = 2) -> list[NaiveEvent]:
    """Run the bordered schedule without the border pass and log each repair.

    After a repair that breaks an already visited cell, that cell is repaired
    in turn (up to ``max_bounces`` times) to show the two repairs undoing each
    other. Debug/regression helper only.
    """
    conds = _cyclic_conditions(f, L)
    schedule = CyclicSchedule(f.m, f.n, conds, BORDERED, strict=False)
    sweep = _sweep(f, schedule)
    events: list[NaiveEvent] = []

    def broken(done_weight: int, skip: Cell) -> tuple[Cell, ...]:
        out = []
        for r in range(sweep.cur + 1):
            i, j = sweep.order[r]
            if (i, j) != skip and i + j <= done_weight and sweep.violating(i, j):
                out.append((i, j))
        return tuple(out)

    def snapshot() -> Tiling:
        return Tiling(f.m, f.n, tuple(sweep.g), f.tiles)

    while sweep.cur + 1 < len(sweep.order):
        sweep.cur += 1
        i, j = sweep.order[sweep.cur]
        sweep.refresh(i, j)
        if not sweep.violating(i, j):
            continue
        _naive_repair(sweep, i, j)
        bad = broken(i + j, (i, j))
        events.append(NaiveEvent((i, j), snapshot(), bad))
        if bad:
            cell = bad[0]
            for _ in range(max_bounces - 1):
                _naive_repair(sweep, *cell)
                again = broken(i + j, cell)
                events.append(NaiveEvent(cell, snapshot(), again))
                if not again:
                    break
                cell = again[0]
            break
    return events


def _naive_repair(sweep: Sweep, i: int, j: int) -> None:
    try:
        sweep.repair(i, j)
    except InternalError:
        # the naive schedule may leave the cell violating; that is the point
        pass


__all__ = [
    "CyclicSchedule",
    "NaiveEvent",
    "border_conditions_hold",
    "dapple_cyclic",
    "dapple_cyclic_p2",
    "demonstrate_naive_failure",
    "draughtboard_border",
    "is_cyclically_dappled",
    "is_p2_shape",
    "violates_cyclic",
]
