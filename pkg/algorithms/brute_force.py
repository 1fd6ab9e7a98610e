"""
Brute Force Diameter

The O(N^2) oracle: every unordered pair is evaluated once, in nested-loop
order (i < j). Its output on fixed seeds is the fixture every other
algorithm is checked against.
"""
import logging

import numpy as np

from core.geometry import squared_distances_to
from core.point_set import PointSet
from .base import DiameterAlgorithm
from .report import DiameterReport, PhaseCounters

logger = logging.getLogger(__name__)


def brute_force_diameter(points: PointSet) -> DiameterReport:
    """
    Max squared distance over all pairs i < j.

    Witness is the first pair in nested-loop order attaining the max: each
    row contributes its first maximizing j (argmax), and a later row only
    replaces the witness on strict improvement.
    """
    points.require_pairs()
    xs, ys = points.xs, points.ys
    n = len(points)

    best = -np.inf
    wi, wj = 0, 1
    for i in range(n - 1):
        row = squared_distances_to(xs[i + 1:], ys[i + 1:], xs[i], ys[i])
        k = int(np.argmax(row))
        if row[k] > best:
            best = float(row[k])
            wi, wj = i, i + 1 + k

    counters = PhaseCounters(pair_evals=n * (n - 1) // 2)
    logger.debug(f"Brute force: n={n}, sq={best!r}, witness=({wi}, {wj})")
    return DiameterReport.build(best, wi, wj, counters)


class BruteForceAlgorithm(DiameterAlgorithm):
    name = "brute"
    description = "All-pairs scan, O(N^2); the reference oracle"
    quadratic = True

    def compute(self, points: PointSet) -> DiameterReport:
        return brute_force_diameter(points)


brute_force_algorithm = BruteForceAlgorithm()
