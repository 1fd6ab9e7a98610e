"""
Convex Hull Baseline

Monotone-chain hull followed by rotating calipers over antipodal vertex
pairs. O(N log N) for the sort, linear afterwards.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from core.errors import EmptyInputError
from core.geometry import squared_distance
from core.point_set import PointSet
from .base import DiameterAlgorithm
from .report import DiameterReport, PhaseCounters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HullPolygon:
    """Counterclockwise, strictly convex; vertices are indices into the source PointSet."""
    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def _cross(xs: List[float], ys: List[float], o: int, a: int, b: int) -> float:
    """Positive when o -> a -> b turns left."""
    return (xs[a] - xs[o]) * (ys[b] - ys[o]) - (ys[a] - ys[o]) * (xs[b] - xs[o])


def convex_hull(points: PointSet) -> HullPolygon:
    """
    Andrew's monotone chain.

    Sort ties are broken by (x, then y, then index); coincident points keep
    only their lowest index, and collinear points on hull edges are dropped.
    """
    n = len(points)
    if n == 0:
        raise EmptyInputError("Cannot build the hull of an empty point set")

    xs, ys = points.xs.tolist(), points.ys.tolist()
    order = np.lexsort((np.arange(n), points.ys, points.xs)).tolist()

    unique: List[int] = []
    for k in order:
        if unique and xs[k] == xs[unique[-1]] and ys[k] == ys[unique[-1]]:
            continue
        unique.append(k)

    if len(unique) == 1:
        return HullPolygon((unique[0],))

    lower: List[int] = []
    for k in unique:
        while len(lower) >= 2 and _cross(xs, ys, lower[-2], lower[-1], k) <= 0:
            lower.pop()
        lower.append(k)

    upper: List[int] = []
    for k in reversed(unique):
        while len(upper) >= 2 and _cross(xs, ys, upper[-2], upper[-1], k) <= 0:
            upper.pop()
        upper.append(k)

    return HullPolygon(tuple(lower[:-1] + upper[:-1]))


def hull_diameter(points: PointSet) -> DiameterReport:
    """Diameter as the farthest antipodal pair of the convex hull."""
    points.require_pairs()
    hull = convex_hull(points)
    v = hull.vertices
    m = len(v)
    counters = PhaseCounters()

    # Degenerate hulls
    if m == 1:
        counters.pair_evals = 1
        return DiameterReport.build(squared_distance(points[0], points[1]), 0, 1, counters)
    if m == 2:
        counters.pair_evals = 1
        return DiameterReport.build(squared_distance(points[v[0]], points[v[1]]), v[0], v[1], counters)

    xs, ys = points.xs.tolist(), points.ys.tolist()
    best = -1.0
    wi, wj = v[0], v[1]
    evals = 0

    j = 1
    for i in range(m):
        ni = (i + 1) % m
        # Advance j while the next vertex is farther from edge (i, ni)
        while _cross(xs, ys, v[i], v[ni], v[(j + 1) % m]) > _cross(xs, ys, v[i], v[ni], v[j]):
            j = (j + 1) % m
        for a in (v[i], v[ni]):
            dx = xs[a] - xs[v[j]]
            dy = ys[a] - ys[v[j]]
            sq = dx * dx + dy * dy
            evals += 1
            if sq > best:
                best, wi, wj = sq, a, v[j]

    counters.pair_evals = evals
    logger.debug(f"Hull diameter: n={len(points)}, hull={m}, sq={best!r}")
    return DiameterReport.build(best, wi, wj, counters)


class HullDiameterAlgorithm(DiameterAlgorithm):
    name = "hull"
    description = "Monotone-chain hull + rotating calipers, O(N log N)"

    def compute(self, points: PointSet) -> DiameterReport:
        return hull_diameter(points)


hull_algorithm = HullDiameterAlgorithm()
