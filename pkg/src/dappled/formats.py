"""Reading and writing tilings, condition sets, palettes and Wang tilings.

Tiling text::

    # generator=mt19937/sha512-str-seed seed=7
    # tiles: 0 1
    3 2
    0 1 1
    1 0 0

Lines starting with ``#`` are comments, except ``# tiles:`` which fixes the
tile alphabet and its order. Without it the alphabet is ``0..k-1`` when every
symbol is an integer, otherwise the sorted set of symbols seen.
"""

from __future__ import annotations

import json
from typing import Any

from .core import INF, Condition, ConditionSet, TileSet, Tiling
from .errors import InvalidConditions, InvalidInput
from .rng import header
from .wang import WangTiling


def _infer_tiles(symbols: set[str]) -> TileSet:
    if all(s.isdigit() for s in symbols):
        k = max(2, max(int(s) for s in symbols) + 1)
        return TileSet.of_size(k)
    ordered = sorted(symbols)
    if len(ordered) < 2:
        raise InvalidInput("cannot infer a tile set from a single symbol; add a '# tiles:' line")
    return TileSet(tuple(ordered))


def parse_tiling(text: str, tiles: TileSet | None = None) -> Tiling:
    declared = None
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            rest = line[1:].strip()
            if rest.startswith("tiles:"):
                declared = TileSet(tuple(rest[len("tiles:"):].split()))
            continue
        body.append(line.split())
    if not body:
        raise InvalidInput("tiling file is empty")
    try:
        m, n = (int(x) for x in body[0])
    except ValueError:
        raise InvalidInput(f"first line must be 'm n', got {' '.join(body[0])!r}") from None
    rows = body[1:]
    if len(rows) != n:
        raise InvalidInput(f"expected {n} rows, got {len(rows)}")
    for j, r in enumerate(rows):
        if len(r) != m:
            raise InvalidInput(f"row {j} has {len(r)} entries, expected {m}")
    if declared is not None and tiles is not None and declared != tiles:
        raise InvalidInput(f"file declares tiles {declared.symbols}, expected {tiles.symbols}")
    ts = declared or tiles or _infer_tiles({s for r in rows for s in r})
    cells = tuple(ts.index(s) for r in rows for s in r)
    return Tiling(m, n, cells, ts)


def format_tiling(f: Tiling, seed: int | None = None) -> str:
    lines = [f"# {header(seed)}", "# tiles: " + " ".join(f.tiles.symbols), f"{f.m} {f.n}"]
    lines += [" ".join(r) for r in f.symbol_rows()]
    return "\n".join(lines) + "\n"


def _bound_out(b) -> Any:
    return "inf" if b == INF else b


def _tile_index(raw, tiles: TileSet) -> int:
    try:
        return tiles.index(str(raw))
    except InvalidInput as exc:
        raise InvalidConditions(str(exc)) from None


def conditions_from_dict(data: dict, tiles: TileSet | None = None) -> tuple[ConditionSet, TileSet]:
    """Parse the condition JSON object; returns the set and the tile alphabet it names."""
    if not isinstance(data, dict) or not isinstance(data.get("conditions"), list):
        raise InvalidConditions("condition file needs a 'conditions' list")
    if "tiles" in data:
        try:
            ts = TileSet(tuple(str(s) for s in data["tiles"]))
        except (InvalidInput, TypeError) as exc:
            raise InvalidConditions(f"bad tile list: {exc}") from None
    else:
        ts = tiles or TileSet.of_size(2)
    conds = []
    for k, c in enumerate(data["conditions"]):
        if not isinstance(c, dict) or "tile" not in c or "axis" not in c:
            raise InvalidConditions(f"condition {k} needs 'tile' and 'axis'")
        axis = str(c["axis"]).upper()
        grid = c.get("bound_grid")
        try:
            if grid is not None:
                conds.append(Condition(_tile_index(c["tile"], ts), axis, INF, grid))
            else:
                conds.append(Condition(_tile_index(c["tile"], ts), axis, c.get("bound", "inf")))
        except (TypeError, ValueError) as exc:
            raise InvalidConditions(f"condition {k}: {exc}") from None
    cyclic = data.get("cyclic", False)
    if not isinstance(cyclic, bool):
        raise InvalidConditions("'cyclic' must be true or false")
    return ConditionSet(tuple(conds), cyclic, ts), ts


def parse_conditions(text: str, tiles: TileSet | None = None) -> tuple[ConditionSet, TileSet]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidConditions(f"condition file is not JSON: {exc}") from None
    return conditions_from_dict(data, tiles)


def load_problem(tiling_text: str, conditions_text: str) -> tuple[Tiling, ConditionSet]:
    """Tiling plus condition set, sharing one tile alphabet.

    A ``tiles`` list in the condition file wins; the tiling must agree
    with it. Otherwise the conditions name tiles of the tiling's alphabet.
    """
    try:
        data = json.loads(conditions_text)
    except json.JSONDecodeError as exc:
        raise InvalidConditions(f"condition file is not JSON: {exc}") from None
    ts = None
    if isinstance(data, dict) and "tiles" in data:
        ts = conditions_from_dict(data)[1]
    f = parse_tiling(tiling_text, ts)
    L, _ = conditions_from_dict(data, f.tiles)
    return f, L


def conditions_to_dict(L: ConditionSet, tiles: TileSet) -> dict:
    out = []
    for c in L:
        d: dict[str, Any] = {"tile": tiles.symbols[c.tile], "axis": c.axis}
        if c.per_cell:
            d["bound_grid"] = [[_bound_out(b) for b in row] for row in c.bound_grid]
        else:
            d["bound"] = _bound_out(c.bound)
        out.append(d)
    return {"tiles": list(tiles.symbols), "cyclic": L.cyclic, "conditions": out}


def parse_palette(text: str) -> dict[str, str] | list[str]:
    """A symbol -> colour object, or a list of colours in tile order."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"palette file is not JSON: {exc}") from None
    if isinstance(data, dict) and isinstance(data.get("palette"), dict):
        data = data["palette"]
    if isinstance(data, list):
        return [str(v) for v in data]
    if not isinstance(data, dict):
        raise InvalidInput("palette must map tile symbols to colours")
    return {str(k): str(v) for k, v in data.items()}


def parse_wang(text: str) -> WangTiling:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"Wang file is not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidInput("Wang file must hold a JSON object")
    return WangTiling.from_dict(data)


__all__ = [
    "conditions_from_dict",
    "conditions_to_dict",
    "format_tiling",
    "load_problem",
    "parse_conditions",
    "parse_palette",
    "parse_tiling",
    "parse_wang",
]
