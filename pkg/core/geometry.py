"""
Geometry primitives

Point, bounding box and squared-distance operations shared by every
algorithm. All comparisons in the library are made on squared distances;
the single square root is taken when a report is rendered.

The scalar and vectorized distance helpers evaluate the same expression
shape (two subtractions, two multiplications, one addition) in IEEE-754
double precision, so a pair yields bit-identical values whichever path
computed it.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import EmptyInputError

# Squared Euclidean distance, length^2 units
SqDist = float


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Aabb:
    """Axis-aligned bounding box with closed boundaries. Degenerate boxes are allowed."""
    min_x: float
    min_y: float
    max_x: float
    max_y: float

    @property
    def width(self) -> float:
        """a, the side used by the adjacency and diagonal thresholds"""
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        """b"""
        return self.max_y - self.min_y

    @property
    def center(self) -> Point2:
        return Point2(0.5 * (self.min_x + self.max_x), 0.5 * (self.min_y + self.max_y))

    def contains(self, p: Point2) -> bool:
        return self.min_x <= p.x <= self.max_x and self.min_y <= p.y <= self.max_y


def squared_distance(p: Point2, q: Point2) -> SqDist:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def squared_distances_to(xs: np.ndarray, ys: np.ndarray, px: float, py: float) -> np.ndarray:
    """Squared distances from (px, py) to every (xs[k], ys[k]); bit-identical to squared_distance."""
    dx = xs - px
    dy = ys - py
    return dx * dx + dy * dy


def compute_aabb(points) -> Aabb:
    """Tight box of a PointSet in one pass over each axis."""
    if len(points) == 0:
        raise EmptyInputError("Cannot bound an empty point set")
    xs, ys = points.xs, points.ys
    return Aabb(float(xs.min()), float(ys.min()), float(xs.max()), float(ys.max()))


def corners(box: Aabb) -> Tuple[Point2, Point2, Point2, Point2]:
    """
    Corners counterclockwise from (min_x, min_y).

    c1=(min_x,min_y), c2=(max_x,min_y), c3=(max_x,max_y), c4=(min_x,max_y).
    Quadrant set i belongs to corner c_i everywhere in the library.
    """
    return (
        Point2(box.min_x, box.min_y),
        Point2(box.max_x, box.min_y),
        Point2(box.max_x, box.max_y),
        Point2(box.min_x, box.max_y),
    )


def max_corner_sq_distance(p: Point2, box: Aabb) -> SqDist:
    """Upper bound on the squared distance from p to any point of the box."""
    return max(squared_distance(p, c) for c in corners(box))


def max_corner_sq_distances(xs: np.ndarray, ys: np.ndarray, box: Aabb) -> np.ndarray:
    """
    Vectorized max_corner_sq_distance.

    The farthest corner is farthest independently per axis, and rounding is
    monotone, so max(dx^2) + max(dy^2) equals the max over the four corner
    sums bit for bit.
    """
    dx_lo = xs - box.min_x
    dx_hi = xs - box.max_x
    dy_lo = ys - box.min_y
    dy_hi = ys - box.max_y
    fx = np.maximum(dx_lo * dx_lo, dx_hi * dx_hi)
    fy = np.maximum(dy_lo * dy_lo, dy_hi * dy_hi)
    return fx + fy
