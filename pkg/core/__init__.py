"""
Max-Distance Toolkit - Core

Geometry primitives and the error hierarchy every algorithm builds upon.
"""

from .errors import (
    DiameterError,
    EmptyInputError,
    TooFewPointsError,
    NonFiniteInputError,
    BadParameterError,
    PointParseError,
    BadMagicError,
    PointIOError,
)
from .geometry import (
    Point2,
    Aabb,
    SqDist,
    squared_distance,
    squared_distances_to,
    compute_aabb,
    corners,
    max_corner_sq_distance,
    max_corner_sq_distances,
)
from .point_set import PointSet

__all__ = [
    "DiameterError",
    "EmptyInputError",
    "TooFewPointsError",
    "NonFiniteInputError",
    "BadParameterError",
    "PointParseError",
    "BadMagicError",
    "PointIOError",
    "Point2",
    "Aabb",
    "SqDist",
    "squared_distance",
    "squared_distances_to",
    "compute_aabb",
    "corners",
    "max_corner_sq_distance",
    "max_corner_sq_distances",
    "PointSet",
]
