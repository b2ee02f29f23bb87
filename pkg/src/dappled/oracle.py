"""Ground truth on small grids: exhaustive enumeration and draughtboards.

``enumerate_dappled`` fills cells row-major from the top-left corner and
prunes a prefix as soon as a completed run breaks a bound. ``filter_dappled``
is the naive alternative (test every tiling with ``is_dappled``) and exists
only to cross-check the former.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .core import INF, ConditionSet, TileSet, Tiling, is_dappled
from .errors import InvalidShape, SizeLimit
from .rng import stream

# 2**36 candidate tilings, i.e. a 36-cell binary grid
MAX_SEARCH = 2**36


@dataclass
class EnumerationResult:
    count: int
    tilings: list[Tiling] | None = None
    truncated: bool = False
    N: int = 0  # ceil(m/2) * ceil(n/2)
    N_prime: int = 0  # floor(m/2) * floor(n/2)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tilings is not None and not self.truncated:
            assert len(self.tilings) == self.count


def block_counts(m: int, n: int) -> tuple[int, int]:
    """(N, N') = (ceil(m/2) ceil(n/2), floor(m/2) floor(n/2))."""
    return math.ceil(m / 2) * math.ceil(n / 2), (m // 2) * (n // 2)


def _guard(m: int, n: int, k: int, allow_large: bool) -> None:
    if not allow_large and k ** (m * n) > MAX_SEARCH:
        raise SizeLimit(
            f"{k}^{m * n} candidate tilings exceeds the search limit; pass allow_large to force"
        )


def enumerate_dappled(
    m: int,
    n: int,
    tiles: TileSet | int,
    L: ConditionSet,
    *,
    cyclic: bool | None = None,
    keep: bool = False,
    limit: int | None = None,
    allow_large: bool = False,
) -> EnumerationResult:
    """Count (and optionally list) the dappled tilings of an ``m x n`` grid.

    Cyclic conditions (``L.cyclic`` or ``cyclic=True``) are checked in full
    when a row closes (horizontal) and when the last row is placed
    (vertical); before that, only the non-wrapping part prunes.
    """
    if isinstance(tiles, int):
        tiles = TileSet.of_size(tiles)
    k = len(tiles)
    cyclic = L.cyclic if cyclic is None else cyclic
    _guard(m, n, k, allow_large)
    L.check_shape(m, n)
    hb, vb = L.bound_tables(m, n, k)
    if cyclic:
        for c in L:
            if c.min_bound() != INF and c.min_bound() >= (m if c.axis == "H" else n):
                raise InvalidShape(f"cyclic {c} needs the period to exceed the bound")
    size = m * n
    g = [0] * size
    hrun = [0] * size
    vrun = [0] * size
    found: list[Tiling] | None = [] if keep else None
    count = 0
    truncated = False

    def wrap_ok_row(j: int) -> bool:
        base = j * m
        for i in range(m):
            t = g[base + i]
            b = hb[t][base + i]
            if b == INF:
                continue
            if all(g[base + (i - d) % m] == t for d in range(1, b + 1)):
                return False
        return True

    def wrap_ok_col(i: int) -> bool:
        for j in range(n):
            t = g[j * m + i]
            b = vb[t][j * m + i]
            if b == INF:
                continue
            if all(g[((j - d) % n) * m + i] == t for d in range(1, b + 1)):
                return False
        return True

    def place(idx: int) -> None:
        nonlocal count, truncated
        if idx == size:
            if cyclic and not all(wrap_ok_col(i) for i in range(m)):
                return
            count += 1
            if found is not None:
                if limit is None or len(found) < limit:
                    found.append(Tiling(m, n, tuple(g), tiles))
                else:
                    truncated = True
            return
        i, j = idx % m, idx // m
        for t in range(k):
            g[idx] = t
            h = hrun[idx] = hrun[idx - 1] + 1 if i > 0 and g[idx - 1] == t else 1
            v = vrun[idx] = vrun[idx - m] + 1 if j > 0 and g[idx - m] == t else 1
            if h > hb[t][idx] or v > vb[t][idx]:
                continue
            if cyclic and i == m - 1 and not wrap_ok_row(j):
                continue
            place(idx + 1)

    place(0)
    N, Np = block_counts(m, n)
    return EnumerationResult(count, found, truncated, N, Np)


def filter_dappled(m: int, n: int, tiles: TileSet | int, L: ConditionSet,
                   allow_large: bool = False) -> list[Tiling]:
    """Every dappled tiling, by testing all ``|T|^(m n)`` tilings."""
    if isinstance(tiles, int):
        tiles = TileSet.of_size(tiles)
    _guard(m, n, len(tiles), allow_large)
    out = []
    for cells in itertools.product(range(len(tiles)), repeat=m * n):
        f = Tiling(m, n, cells, tiles)
        if is_dappled(f, L)[0]:
            out.append(f)
    return out


def draughtboard(m: int, n: int, tiles: TileSet | int = 2, seed: int = 0) -> Tiling:
    """A random draughtboard tiling.

    Each 2x2 block gets a tile ``t`` on its main diagonal and tiles other
    than ``t`` on the two remaining cells. Dappled for every condition set
    whose bounds are all at least 2.
    """
    if isinstance(tiles, int):
        tiles = TileSet.of_size(tiles)
    k = len(tiles)
    rng = stream(seed, "draughtboard", m, n, k)
    g = [0] * (m * n)
    for l in range(0, n, 2):
        for kk in range(0, m, 2):
            t = rng.randrange(k)
            others = [x for x in range(k) if x != t]
            a, b = rng.choice(others), rng.choice(others)
            g[l * m + kk] = t
            if kk + 1 < m:
                g[l * m + kk + 1] = a
            if l + 1 < n:
                g[(l + 1) * m + kk] = b
                if kk + 1 < m:
                    g[(l + 1) * m + kk + 1] = t
    return Tiling(m, n, tuple(g), tiles)


def _block_ok(block: dict) -> bool:
    # off-diagonal cells differ from both diagonal cells of the block
    diag = [block[c] for c in ((0, 0), (1, 1)) if c in block]
    off = [block[c] for c in ((1, 0), (0, 1)) if c in block]
    return all(o != d for o in off for d in diag)


def is_draughtboard(f: Tiling) -> bool:
    """Every 2x2 block (clipped at the border) has off-diagonal cells unlike its diagonal ones."""
    for l in range(0, f.n, 2):
        for k in range(0, f.m, 2):
            block = {
                (di, dj): f.get(k + di, l + dj)
                for di in (0, 1)
                for dj in (0, 1)
                if f.get(k + di, l + dj) is not None
            }
            if not _block_ok(block):
                return False
    return True


def count_draughtboards(m: int, n: int, tiles: TileSet | int, allow_large: bool = False) -> int:
    """Number of draughtboard tilings, by enumerating admissible patterns block by block.

    Blocks are disjoint, so the total is the product of per-block counts.
    """
    k = tiles if isinstance(tiles, int) else len(tiles)
    # a single block has at most 4 cells; the guard only protects huge |T|
    if not allow_large and k**4 > MAX_SEARCH:
        raise SizeLimit(f"{k} tiles is too many for block enumeration")
    cache: dict[tuple[int, int], int] = {}
    total = 1
    for l in range(0, n, 2):
        for kk in range(0, m, 2):
            shape = (min(2, m - kk), min(2, n - l))
            if shape not in cache:
                cells = [(di, dj) for dj in range(shape[1]) for di in range(shape[0])]
                cache[shape] = sum(
                    _block_ok(dict(zip(cells, vals)))
                    for vals in itertools.product(range(k), repeat=len(cells))
                )
            total *= cache[shape]
    return total


def draughtboard_lower_bound(m: int, n: int, k: int) -> int:
    """max(k^N, (k(k-1)^2 + k(k-1)(k-2)^2)^N') from the block-count argument."""
    N, Np = block_counts(m, n)
    per_block = k * (k - 1) ** 2 + k * (k - 1) * (k - 2) ** 2
    return max(k**N, per_block**Np)


__all__ = [
    "EnumerationResult",
    "block_counts",
    "count_draughtboards",
    "draughtboard",
    "draughtboard_lower_bound",
    "enumerate_dappled",
    "filter_dappled",
    "is_draughtboard",
]
