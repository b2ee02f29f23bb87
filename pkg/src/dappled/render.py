"""SVG and PPM output for tilings and brick Wang tilings.

Everything is emitted in a fixed order with fixed number formatting, so the
same input always gives the same bytes. Cells are 32 units wide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Tiling
from .errors import InvalidInput, InvalidWang, PaletteMismatch
from .wang import HORIZONTAL, WangTiling, classify, is_valid_wang

CELL = 32
DEFAULT_COLORS = ("#f5f0e6", "#e8772e", "#3b6ea8", "#5a9e4b", "#c94c4c", "#8a63b8", "#d8b43c", "#555555")
BRICK_FILL = "#b5533c"
SEAM = "#efe6d8"

_HEX = re.compile(r"^#([0-9a-fA-F]{3}|[0-9a-fA-F]{6})$")


def default_palette(f: Tiling) -> dict[str, str]:
    syms = f.tiles.symbols
    return {s: DEFAULT_COLORS[k % len(DEFAULT_COLORS)] for k, s in enumerate(syms)}


def resolve_palette(f: Tiling, palette: Mapping[str, str] | Sequence[str]) -> list[str]:
    """Colours indexed by tile index; raises PaletteMismatch unless one per tile."""
    syms = f.tiles.symbols
    if isinstance(palette, Mapping):
        if len(palette) != len(syms):
            raise PaletteMismatch(f"palette has {len(palette)} entries for {len(syms)} tiles")
        try:
            colors = [str(palette[s]) for s in syms]
        except KeyError as exc:
            raise PaletteMismatch(f"palette has no colour for tile {exc.args[0]!r}") from None
    else:
        colors = [str(c) for c in palette]
        if len(colors) != len(syms):
            raise PaletteMismatch(f"palette has {len(colors)} entries for {len(syms)} tiles")
    for c in colors:
        if not c or any(ch in c for ch in "<>&\"'"):
            raise PaletteMismatch(f"unusable colour {c!r}")
    return colors


def _num(v: float) -> str:
    # compact and stable: integers print without a decimal point
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _open(width: int, height: int, comment: str | None) -> list[str]:
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    if comment:
        out.append(f"<!-- {comment.replace('--', '- -')} -->")
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return out


def render_tiling_svg(f: Tiling, palette: Mapping[str, str] | Sequence[str] | None = None,
                      comment: str | None = None) -> str:
    """One square per cell, in row-major order."""
    colors = resolve_palette(f, default_palette(f) if palette is None else palette)
    out = _open(f.m * CELL, f.n * CELL, comment)
    for j in range(f.n):
        for i in range(f.m):
            out.append(
                f'<rect x="{i * CELL}" y="{j * CELL}" width="{CELL}" height="{CELL}" '
                f'fill="{colors[f[i, j]]}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def offset(color: int, ncolors: int) -> float:
    """Position of a seam of this colour along a tile edge, in cell units."""
    return CELL * (color + 1) / (ncolors + 1)


@dataclass(frozen=True)
class Segment:
    x1: float
    y1: float
    x2: float
    y2: float
    kind: str  # "traverse" or "stub"


def wang_segments(tau: WangTiling) -> list[Segment]:
    """Seam segments of every tile, row-major, traversal first then stubs.

    A horizontal tile's seam runs from its left edge point to its right edge
    point; short stubs join its top and bottom edge points to that seam.
    Vertical tiles are the transpose.
    """
    segs = []
    k = tau.colors
    for j in range(tau.n):
        for i in range(tau.m):
            w = tau[i, j]
            x0, y0 = i * CELL, j * CELL
            if classify(w) == HORIZONTAL:
                y = y0 + offset(w.c1, k)
                segs.append(Segment(x0, y, x0 + CELL, y, "traverse"))
                segs.append(Segment(x0 + offset(w.c2, k), y0, x0 + offset(w.c2, k), y, "stub"))
                segs.append(Segment(x0 + offset(w.c4, k), y, x0 + offset(w.c4, k), y0 + CELL, "stub"))
            else:
                x = x0 + offset(w.c2, k)
                segs.append(Segment(x, y0, x, y0 + CELL, "traverse"))
                segs.append(Segment(x0, y0 + offset(w.c1, k), x, y0 + offset(w.c1, k), "stub"))
                segs.append(Segment(x, y0 + offset(w.c3, k), x0 + CELL, y0 + offset(w.c3, k), "stub"))
    return segs


def _check_wang(tau: WangTiling) -> None:
    ok, bad = is_valid_wang(tau)
    if not ok:
        raise InvalidWang(f"{len(bad)} problem(s), first: {bad[0]}")


def render_wang_svg(tau: WangTiling, comment: str | None = None) -> str:
    """Brick wall drawing of a valid Wang tiling."""
    _check_wang(tau)
    w, h = tau.m * CELL, tau.n * CELL
    out = _open(w, h, comment)
    out.append(f'<rect x="0" y="0" width="{w}" height="{h}" fill="{BRICK_FILL}"/>')
    out.append(f'<g stroke="{SEAM}" stroke-width="3" stroke-linecap="square">')
    for s in wang_segments(tau):
        out.append(
            f'<line class="{s.kind}" x1="{_num(s.x1)}" y1="{_num(s.y1)}" '
            f'x2="{_num(s.x2)}" y2="{_num(s.y2)}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _rgb(color: str) -> tuple[int, int, int]:
    if not _HEX.match(color):
        raise PaletteMismatch(f"PPM output needs #rgb or #rrggbb colours, got {color!r}")
    h = color[1:]
    if len(h) == 3:
        h = "".join(ch * 2 for ch in h)
    return int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16)


class Canvas:
    """Minimal RGB raster with rectangle fills, written as binary PPM."""

    def __init__(self, width: int, height: int, fill=(0, 0, 0)):
        if width < 1 or height < 1:
            raise InvalidInput("empty canvas")
        self.width, self.height = width, height
        self.pixels = bytearray(bytes(fill) * (width * height))

    def rect(self, x0: int, y0: int, x1: int, y1: int, rgb) -> None:
        x0, y0 = max(0, x0), max(0, y0)
        x1, y1 = min(self.width, x1), min(self.height, y1)
        if x0 >= x1 or y0 >= y1:
            return
        row = bytes(rgb) * (x1 - x0)
        for y in range(y0, y1):
            start = (y * self.width + x0) * 3
            self.pixels[start:start + len(row)] = row

    def to_ppm(self) -> bytes:
        return f"P6\n{self.width} {self.height}\n255\n".encode("ascii") + bytes(self.pixels)


def render_tiling_ppm(f: Tiling, palette: Mapping[str, str] | Sequence[str] | None = None,
                      scale: int = 8) -> bytes:
    colors = [_rgb(c) for c in resolve_palette(f, default_palette(f) if palette is None else palette)]
    canvas = Canvas(f.m * scale, f.n * scale)
    for j in range(f.n):
        for i in range(f.m):
            canvas.rect(i * scale, j * scale, (i + 1) * scale, (j + 1) * scale, colors[f[i, j]])
    return canvas.to_ppm()


def render_wang_ppm(tau: WangTiling) -> bytes:
    """Raster version of :func:`render_wang_svg` at one pixel per unit."""
    _check_wang(tau)
    canvas = Canvas(tau.m * CELL, tau.n * CELL, _rgb(BRICK_FILL))
    seam = _rgb(SEAM)
    for s in wang_segments(tau):
        x0, x1 = sorted((round(s.x1), round(s.x2)))
        y0, y1 = sorted((round(s.y1), round(s.y2)))
        canvas.rect(x0 - 1, y0 - 1, x1 + 2, y1 + 2, seam)
    return canvas.to_ppm()


__all__ = [
    "CELL",
    "Canvas",
    "Segment",
    "default_palette",
    "offset",
    "render_tiling_ppm",
    "render_tiling_svg",
    "render_wang_ppm",
    "render_wang_svg",
    "resolve_palette",
    "wang_segments",
]
