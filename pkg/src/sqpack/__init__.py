"""Exact optimal axis-parallel square packings in the unit square."""

from .geometry import (
    InvalidPackingError,
    OverlapWitness,
    Packing,
    PreconditionError,
    Square,
    ValidationReport,
    Violation,
    is_tiling,
    packing,
    square,
    squares_overlap,
    total_area,
    total_side_length,
    validate,
)
from .values import Decomposition, decompose, g_value
from .construct import (
    construct_grid,
    construct_lshape,
    construct_optimal,
    construct_split,
)
from .sweep import (
    SweepTranscript,
    average_crossings,
    best_offset,
    build_transcript,
    refute_sweep,
    sweep_counts,
)
from .lattice import (
    CountProfile,
    StretchedInstance,
    count_profile,
    find_offset,
    refute_lattice,
    stretch,
)
from .anneal import FloatPacking, SearchConfig, optimize, rationalize
from .formats import emit_packing, emit_svg, parse_packing

__version__ = "0.1.0"

__all__ = [
    "InvalidPackingError",
    "OverlapWitness",
    "Packing",
    "PreconditionError",
    "Square",
    "ValidationReport",
    "Violation",
    "is_tiling",
    "packing",
    "square",
    "squares_overlap",
    "total_area",
    "total_side_length",
    "validate",
    "Decomposition",
    "decompose",
    "g_value",
    "construct_grid",
    "construct_lshape",
    "construct_optimal",
    "construct_split",
    "SweepTranscript",
    "average_crossings",
    "best_offset",
    "build_transcript",
    "refute_sweep",
    "sweep_counts",
    "CountProfile",
    "StretchedInstance",
    "count_profile",
    "find_offset",
    "refute_lattice",
    "stretch",
    "FloatPacking",
    "SearchConfig",
    "optimize",
    "rationalize",
    "emit_packing",
    "emit_svg",
    "parse_packing",
]
