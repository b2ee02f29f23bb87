"""Particles drifting through a two-tile tiling read as a flow field.

A ``-`` tile moves particles left or right, a ``|`` tile up or down. Tiles
without those symbols use index 0 as horizontal and index 1 as vertical.
Particles move at one cell per unit time. Each time a particle reaches a
cell centre it picks a fresh direction along that cell's axis, uniformly at
random. Positions are continuous, with cell ``(i, j)`` covering
``[i, i+1) x [j, j+1)`` and ``y`` growing downwards.

Every commit draws from its own generator keyed by (seed, particle stream,
commit count), so a particle's path does not depend on how many other
particles there are or in which order they are stepped.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from typing import Iterable

from .core import Cell, Tiling
from .errors import InvalidInput, OutOfBounds
from .rng import header, stream

LEFT, RIGHT, UP, DOWN = "left", "right", "up", "down"
HEADINGS = (LEFT, RIGHT, UP, DOWN)
# heading -> (axis, sign); axis 0 is x, 1 is y
_MOTION = {LEFT: (0, -1), RIGHT: (0, 1), UP: (1, -1), DOWN: (1, 1)}
_REVERSE = {LEFT: RIGHT, RIGHT: LEFT, UP: DOWN, DOWN: UP}


@dataclass(frozen=True)
class FlowField:
    tiling: Tiling
    cyclic: bool = False

    def __post_init__(self):
        if len(self.tiling.tiles) != 2:
            raise InvalidInput("a flow field needs exactly two tiles")

    @property
    def m(self) -> int:
        return self.tiling.m

    @property
    def n(self) -> int:
        return self.tiling.n

    def horizontal_index(self) -> int:
        syms = self.tiling.tiles.symbols
        if "-" in syms:
            return syms.index("-")
        if "|" in syms:
            return 1 - syms.index("|")
        return 0

    def axis_at(self, cell: Cell) -> int:
        """0 if the tile at ``cell`` sends particles sideways, 1 if up/down."""
        return 0 if self.tiling[cell] == self.horizontal_index() else 1


@dataclass(frozen=True)
class Particle:
    x: float
    y: float
    heading: str
    stream: int
    commits: int = 0
    last_commit: Cell | None = None

    @property
    def axis(self) -> int:
        return _MOTION[self.heading][0]


def _check_bounds(field: FlowField, p: Particle) -> None:
    ok = (
        math.isfinite(p.x) and math.isfinite(p.y)
        and 0 <= p.x <= field.m and 0 <= p.y <= field.n
    )
    if not ok:
        raise OutOfBounds(f"particle {p.stream} at ({p.x}, {p.y}) is outside {field.m}x{field.n}")
    if p.heading not in _MOTION:
        raise InvalidInput(f"unknown heading {p.heading!r}")


def _commit(field: FlowField, p: Particle, cell: Cell, seed: int) -> Particle:
    rng = stream(seed, "flow", p.stream, p.commits)
    if field.axis_at(cell) == 0:
        heading = rng.choice((LEFT, RIGHT))
    else:
        heading = rng.choice((UP, DOWN))
    return replace(p, heading=heading, commits=p.commits + 1, last_commit=cell)


def spawn_particles(field: FlowField, count: int, seed: int) -> list[Particle]:
    """``count`` particles at random cell centres, each committed to its cell."""
    rng = stream(seed, "spawn", field.m, field.n)
    out = []
    for k in range(count):
        i, j = rng.randrange(field.m), rng.randrange(field.n)
        p = Particle(i + 0.5, j + 0.5, RIGHT, k)
        out.append(_commit(field, p, (i, j), seed))
    return out


def _advance(field: FlowField, p: Particle, dt: float, seed: int) -> Particle:
    remaining = dt
    while True:
        axis, sign = _MOTION[p.heading]
        pos = p.x if axis == 0 else p.y
        size = field.m if axis == 0 else field.n
        # nearest centre strictly ahead; a centre is reached when pos + d >= centre
        if sign > 0:
            centre = math.floor(pos - 0.5) + 1.5
        else:
            centre = math.ceil(pos - 0.5) - 0.5
        to_centre = abs(centre - pos)
        to_wall = math.inf if field.cyclic else (size - pos if sign > 0 else pos)
        if remaining < to_centre and remaining < to_wall:
            return _place(p, axis, pos + sign * remaining, size, field.cyclic)
        if to_centre <= to_wall:
            remaining -= to_centre
            c = centre % size if field.cyclic else centre
            p = _place(p, axis, c, size, field.cyclic)
            cell = (min(int(p.x), field.m - 1), min(int(p.y), field.n - 1))
            p = _commit(field, p, cell, seed)
        else:
            remaining -= to_wall
            p = _place(p, axis, size if sign > 0 else 0.0, size, False)
            p = replace(p, heading=_REVERSE[p.heading])


def _place(p: Particle, axis: int, pos: float, size: int, wrap: bool) -> Particle:
    if wrap:
        pos %= size
    return replace(p, x=pos) if axis == 0 else replace(p, y=pos)


def step_particles(field: FlowField, particles: Iterable[Particle], dt: float,
                   seed: int) -> list[Particle]:
    """Advance every particle by ``dt`` time units."""
    if not dt > 0:
        raise InvalidInput(f"dt must be positive, got {dt}")
    particles = list(particles)
    for p in particles:
        _check_bounds(field, p)
    return [_advance(field, p, dt, seed) for p in particles]


@dataclass(frozen=True)
class Record:
    step: int
    particle_id: int
    x: float
    y: float
    heading: str


def simulate(field: FlowField, count: int, steps: int, dt: float, seed: int,
             particles: list[Particle] | None = None) -> list[list[Particle]]:
    """States after 0..steps steps (the first entry is the spawn state)."""
    state = spawn_particles(field, count, seed) if particles is None else list(particles)
    history = [state]
    for _ in range(steps):
        state = step_particles(field, state, dt, seed)
        history.append(state)
    return history


def records(history: list[list[Particle]]) -> list[Record]:
    return [
        Record(s, p.stream, p.x, p.y, p.heading)
        for s, state in enumerate(history)
        for p in state
    ]


def write_csv(history: list[list[Particle]], fp, seed: int | None = None) -> None:
    """CSV with columns step, particle_id, x, y, heading after a ``#`` header line."""
    fp.write(f"# {header(seed)}\n")
    w = csv.writer(fp, lineterminator="\n")
    w.writerow(["step", "particle_id", "x", "y", "heading"])
    for r in records(history):
        w.writerow([r.step, r.particle_id, f"{r.x:.6f}", f"{r.y:.6f}", r.heading])


__all__ = [
    "DOWN",
    "FlowField",
    "HEADINGS",
    "LEFT",
    "Particle",
    "RIGHT",
    "Record",
    "UP",
    "records",
    "simulate",
    "spawn_particles",
    "step_particles",
    "write_csv",
]
