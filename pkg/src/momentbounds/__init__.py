"""Complementary moment inequalities with matrix-spread and polynomial-span bounds."""

from .errors import *  # noqa: F401,F403
from .moments import MomentSet, Sample, ShapeStats, central_from_raw, compute_moments, shape_stats
from .inequalities import BoundReport, Direction, run_suite
from .spread import Functional, SpreadEstimate, SquareMatrix, best_bounds
from .span import Polynomial, PowerSums, SpanBound, SpanReport, depress, power_sums, span_report

__version__ = "0.1.0"

__all__ = [
    "Sample",
    "MomentSet",
    "ShapeStats",
    "compute_moments",
    "central_from_raw",
    "shape_stats",
    "BoundReport",
    "Direction",
    "run_suite",
    "SquareMatrix",
    "Functional",
    "SpreadEstimate",
    "best_bounds",
    "Polynomial",
    "PowerSums",
    "SpanBound",
    "SpanReport",
    "depress",
    "power_sums",
    "span_report",
]
