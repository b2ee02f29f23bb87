"""Repair grid tilings so that no tile forms an over-long horizontal or vertical run."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    INF,
    BINARY,
    Condition,
    ConditionSet,
    TileSet,
    Tiling,
    ViolationReport,
    find_violations,
    is_dappled,
    violates,
    weight,
)
from .cyclic import (  # noqa: E402
    CyclicSchedule,
    border_conditions_hold,
    dapple_cyclic,
    dapple_cyclic_p2,
    demonstrate_naive_failure,
    is_cyclically_dappled,
    violates_cyclic,
)
from .dappler import DappleTrace, TraceEntry, assert_no_regression, dapple  # noqa: E402
from .errors import (  # noqa: E402
    DappledError,
    InternalError,
    InvalidConditions,
    InvalidInput,
    InvalidShape,
    InvalidWang,
    MismatchedShapes,
    NotInW,
    OutOfBounds,
    PaletteMismatch,
    SizeLimit,
)
from .flow import FlowField, Particle, simulate, spawn_particles, step_particles  # noqa: E402
from .oracle import (  # noqa: E402
    EnumerationResult,
    count_draughtboards,
    draughtboard,
    enumerate_dappled,
    is_draughtboard,
)
from .rng import GENERATOR  # noqa: E402
from .wang import (  # noqa: E402
    BrickWangTile,
    EdgeColorSet,
    WangTiling,
    classify,
    is_valid_wang,
    wang_from_dappled,
)
__all__ = [
    "BINARY",
    "GENERATOR",
    "INF",
    "BrickWangTile",
    "Condition",
    "ConditionSet",
    "CyclicSchedule",
    "DappleTrace",
    "EdgeColorSet",
    "EnumerationResult",
    "FlowField",
    "Particle",
    "TileSet",
    "TraceEntry",
    "Tiling",
    "ViolationReport",
    "WangTiling",
    "assert_no_regression",
    "border_conditions_hold",
    "classify",
    "count_draughtboards",
    "dapple",
    "dapple_cyclic",
    "dapple_cyclic_p2",
    "demonstrate_naive_failure",
    "draughtboard",
    "enumerate_dappled",
    "find_violations",
    "is_cyclically_dappled",
    "is_dappled",
    "is_draughtboard",
    "is_valid_wang",
    "simulate",
    "spawn_particles",
    "step_particles",
    "violates",
    "violates_cyclic",
    "wang_from_dappled",
    "weight",
    "DappledError",
    "InternalError",
    "InvalidConditions",
    "InvalidInput",
    "InvalidShape",
    "InvalidWang",
    "MismatchedShapes",
    "NotInW",
    "OutOfBounds",
    "PaletteMismatch",
    "SizeLimit",
]
