"""Seeded randomness shared by every module.

All randomness goes through :func:`stream`, which returns a Mersenne Twister
(``random.Random``) seeded from a string built out of the base seed and a
tag. String seeds are hashed with SHA-512 by CPython, so streams do not
depend on ``PYTHONHASHSEED`` or on the order in which other streams are used.
"""

from __future__ import annotations

import random

GENERATOR = "mt19937/sha512-str-seed"


def stream(seed: int, *tags: object) -> random.Random:
    """Independent generator for ``(seed, *tags)``."""
    key = ":".join([str(int(seed))] + [str(t) for t in tags])
    return random.Random(key)


def header(seed: int | None) -> str:
    """One-line provenance string written at the top of output files."""
    if seed is None:
        return f"generator={GENERATOR}"
    return f"generator={GENERATOR} seed={int(seed)}"
