"""
Fast Diameter - expected O(N) elimination pipeline

Preprocessing (linear):
    1. bounding box and up to 12 extreme candidates, initial estimate d
    2. remove every point within d of all four box corners (the Ω0 set)
    3. split the survivors into four quadrant sets by half-planes through
       the box center

Run-time (quadratic in survivors only):
    4. scan Ω1 x Ω3, re-eliminate Ω2 and Ω4, scan Ω2 x Ω4
    5. scan the adjacent pairs [Ω1,Ω2], [Ω2,Ω3], [Ω3,Ω4], [Ω4,Ω1], each
       only while d does not exceed the pair's adjacency threshold

Same-quadrant pairs are never scanned: a quadrant cell's diagonal squared
is (a^2 + b^2) / 4 <= max(a, b)^2 <= the initial estimate.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.geometry import (
    Aabb,
    Point2,
    SqDist,
    compute_aabb,
    corners,
    max_corner_sq_distances,
    squared_distance,
    squared_distances_to,
)
from core.point_set import PointSet
from .base import DiameterAlgorithm
from .report import DiameterReport, PhaseCounters

logger = logging.getLogger(__name__)

Witness = Tuple[int, int]

# Adjacent quadrant pairs (0-based set numbers) in scan order
ADJACENT_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (1, 2), (2, 3), (3, 0))


# === Types ===

@dataclass(frozen=True)
class InitialEstimate:
    candidate_indices: Tuple[int, ...]
    d_sq: SqDist
    witness: Witness


@dataclass
class QuadrantPartition:
    """Ω1..Ω4 as append-only index arrays, numbered by the corner order c1..c4."""
    omega: List[np.ndarray]
    eliminated_count: int
    center: Point2

    def sizes(self) -> Tuple[int, int, int, int]:
        return tuple(int(s.size) for s in self.omega)


@dataclass(frozen=True)
class AdjacencyThresholds:
    d2_sq: SqDist      # a^2 + b^2, box diagonal
    dx_adj_sq: SqDist  # a^2 + (b/2)^2, cells sharing a vertical half-plane boundary
    dy_adj_sq: SqDist  # b^2 + (a/2)^2

    def for_pair(self, i: int, j: int) -> SqDist:
        """[Ω1,Ω2] and [Ω3,Ω4] differ in x; [Ω2,Ω3] and [Ω4,Ω1] differ in y."""
        return self.dx_adj_sq if {i, j} in ({0, 1}, {2, 3}) else self.dy_adj_sq


@dataclass(frozen=True)
class FastDiameterOptions:
    """Options change only the work done, never the returned distance."""
    prefilter: bool = True
    adjacency_gates: bool = True
    early_exit: bool = True


@dataclass
class EliminationRecord:
    stage: str
    d_sq: SqDist
    removed: np.ndarray


@dataclass
class SkippedScan:
    pair: Tuple[int, int]  # 1-based set numbers
    d_sq: SqDist
    threshold: SqDist
    set_a: np.ndarray
    set_b: np.ndarray


@dataclass
class PipelineTrace:
    """Optional record of eliminations and skipped gates, filled by fast_diameter."""
    box: Optional[Aabb] = None
    estimate: Optional[InitialEstimate] = None
    partition: Optional[QuadrantPartition] = None
    eliminations: List[EliminationRecord] = field(default_factory=list)
    skipped: List[SkippedScan] = field(default_factory=list)


# === Preprocessing ===

def collect_extreme_candidates(
    points: PointSet,
    box: Aabb,
    counters: Optional[PhaseCounters] = None,
) -> InitialEstimate:
    """
    Up to 12 candidates: the min/max point of each axis, and per corner the
    farthest and the nearest point (first occurrence on ties). All candidate
    pairs are then compared directly.
    """
    points.require_pairs()
    xs, ys = points.xs, points.ys

    found = [np.argmin(xs), np.argmax(xs), np.argmin(ys), np.argmax(ys)]
    for c in corners(box):
        d = squared_distances_to(xs, ys, c.x, c.y)
        found.append(np.argmax(d))
        found.append(np.argmin(d))

    candidates = list(dict.fromkeys(int(k) for k in found))
    if len(candidates) == 1:
        # Only when every point coincides: any second index is a valid witness
        candidates.append(1 if candidates[0] == 0 else 0)

    best = -1.0
    witness: Witness = (candidates[0], candidates[1])
    evals = 0
    for a in range(len(candidates) - 1):
        p = points[candidates[a]]
        for b in range(a + 1, len(candidates)):
            sq = squared_distance(p, points[candidates[b]])
            evals += 1
            if sq > best:
                best = sq
                witness = (candidates[a], candidates[b])

    if counters is not None:
        counters.corner_evals += 4 * len(points)
        counters.candidate_pair_evals += evals

    return InitialEstimate(tuple(candidates), best, witness)


def eliminate(
    points: PointSet,
    indices: Sequence[int],
    box: Aabb,
    d_sq: SqDist,
    counters: Optional[PhaseCounters] = None,
) -> np.ndarray:
    """
    Keep the indices whose farthest box corner is strictly farther than d.

    A point within d of all four corners is within d of every point of the
    box, so it cannot beat the already witnessed estimate. Survivor order
    follows the input order.
    """
    idx = np.asarray(indices, dtype=np.intp)
    if idx.size == 0:
        return idx
    far = max_corner_sq_distances(points.xs[idx], points.ys[idx], box)
    if counters is not None:
        counters.corner_evals += 4 * int(idx.size)
    return idx[far > d_sq]


def partition(points: PointSet, survivors: Sequence[int], box: Aabb) -> QuadrantPartition:
    """
    Half-plane split through the box center. Points on a dividing line go to
    the >= side, so the exact center lands in Ω3.
    """
    idx = np.asarray(survivors, dtype=np.intp)
    center = box.center
    right = points.xs[idx] >= center.x
    top = points.ys[idx] >= center.y
    omega = [
        idx[~right & ~top],
        idx[right & ~top],
        idx[right & top],
        idx[~right & top],
    ]
    return QuadrantPartition(omega, len(points) - int(idx.size), center)


def adjacency_thresholds(box: Aabb) -> AdjacencyThresholds:
    """
    Maximal squared distances between points of two adjacent quadrant cells.

    The larger of the two is max(a, b)^2 + (min(a, b)/2)^2, the short side
    entering halved and then squared.
    """
    a, b = box.width, box.height
    half_a, half_b = a / 2, b / 2
    return AdjacencyThresholds(
        d2_sq=a * a + b * b,
        dx_adj_sq=a * a + half_b * half_b,
        dy_adj_sq=b * b + half_a * half_a,
    )


# === Run-time scans ===

def cross_scan(
    points: PointSet,
    set_a: Sequence[int],
    set_b: Sequence[int],
    d_sq_in: SqDist,
    witness_in: Witness,
    *,
    corner_a: Optional[Point2] = None,
    corner_b: Optional[Point2] = None,
) -> Tuple[SqDist, Witness, int]:
    """
    Max of d_sq_in and every (a, b) in set_a x set_b.

    The witness changes only on strict improvement; within a row the first
    maximizing b wins. corner_a / corner_b are the opposite corners used as a
    per-point prefilter: a point no farther than d from its opposite corner
    is skipped for this scan only.
    """
    a = np.asarray(set_a, dtype=np.intp)
    b = np.asarray(set_b, dtype=np.intp)
    if a.size == 0 or b.size == 0:
        return d_sq_in, witness_in, 0

    xs, ys = points.xs, points.ys
    d_sq, witness, evals = d_sq_in, witness_in, 0

    if corner_b is not None:
        b = b[squared_distances_to(xs[b], ys[b], corner_b.x, corner_b.y) > d_sq]
        if b.size == 0:
            return d_sq, witness, 0

    bx, by = xs[b], ys[b]
    ax, ay = xs[a], ys[a]
    reach = None
    if corner_a is not None:
        reach = squared_distances_to(ax, ay, corner_a.x, corner_a.y).tolist()

    for k in range(a.size):
        if reach is not None and reach[k] <= d_sq:
            continue
        row = squared_distances_to(bx, by, ax[k], ay[k])
        evals += int(b.size)
        m = int(np.argmax(row))
        if row[m] > d_sq:
            d_sq = float(row[m])
            witness = (int(a[k]), int(b[m]))

    return d_sq, witness, evals


# === Pipeline ===

def fast_diameter(
    points: PointSet,
    options: Optional[FastDiameterOptions] = None,
    *,
    trace: Optional[PipelineTrace] = None,
) -> DiameterReport:
    """Exact diameter; the distance always equals brute_force_diameter's."""
    points.require_pairs()
    opts = options or FastDiameterOptions()
    counters = PhaseCounters()
    n = len(points)

    box = compute_aabb(points)
    estimate = collect_extreme_candidates(points, box, counters)
    d_sq, witness = estimate.d_sq, estimate.witness
    thresholds = adjacency_thresholds(box)
    c1, c2, c3, c4 = corners(box)

    survivors = eliminate(points, np.arange(n), box, d_sq, counters)
    counters.eliminated_preprocess = n - int(survivors.size)
    quadrants = partition(points, survivors, box)
    counters.survivors = quadrants.sizes()
    omega = list(quadrants.omega)

    logger.debug(
        f"Fast diameter: n={n}, box a={box.width!r} b={box.height!r}, "
        f"initial sq={d_sq!r} from {len(estimate.candidate_indices)} candidates, "
        f"eliminated={counters.eliminated_preprocess}, survivors={counters.survivors}"
    )

    if trace is not None:
        trace.box = box
        trace.estimate = estimate
        trace.partition = QuadrantPartition(list(omega), quadrants.eliminated_count, quadrants.center)
        removed = np.setdiff1d(np.arange(n), survivors, assume_unique=True)
        trace.eliminations.append(EliminationRecord("preprocess", d_sq, removed))

    def saturated() -> bool:
        # Nothing in the box can be farther apart than its diagonal
        if opts.early_exit and d_sq >= thresholds.d2_sq:
            counters.early_exit = True
            return True
        return False

    def reduce(i: int, stage: str):
        kept = eliminate(points, omega[i], box, d_sq, counters)
        removed = int(omega[i].size - kept.size)
        counters.eliminated_runtime += removed
        if trace is not None and removed:
            trace.eliminations.append(
                EliminationRecord(stage, d_sq, np.setdiff1d(omega[i], kept, assume_unique=True))
            )
        omega[i] = kept

    def scan(i: int, j: int, prefilter: bool):
        nonlocal d_sq, witness
        d_sq, witness, evals = cross_scan(
            points, omega[i], omega[j], d_sq, witness,
            corner_a=(c1, c2, c3, c4)[j] if prefilter else None,
            corner_b=(c1, c2, c3, c4)[i] if prefilter else None,
        )
        counters.pair_evals += evals

    # Diagonal pairs
    if not saturated():
        scan(0, 2, opts.prefilter)
    if not saturated():
        reduce(1, "diagonal Ω2")
        reduce(3, "diagonal Ω4")
        scan(1, 3, opts.prefilter)

    # Adjacent pairs, gated
    for i, j in ADJACENT_PAIRS:
        if saturated():
            break
        threshold = thresholds.for_pair(i, j)
        if opts.adjacency_gates and d_sq > threshold:
            counters.gates_skipped += 1
            if trace is not None:
                trace.skipped.append(
                    SkippedScan((i + 1, j + 1), d_sq, threshold, omega[i].copy(), omega[j].copy())
                )
            continue
        reduce(i, f"adjacent Ω{i + 1}")
        reduce(j, f"adjacent Ω{j + 1}")
        scan(i, j, False)
        counters.adjacent_scans_run += 1

    logger.debug(
        f"Fast diameter done: sq={d_sq!r}, witness={witness}, pair_evals={counters.pair_evals}, "
        f"adjacent_scans={counters.adjacent_scans_run}, gates_skipped={counters.gates_skipped}"
    )
    return DiameterReport.build(d_sq, witness[0], witness[1], counters)


class FastDiameterAlgorithm(DiameterAlgorithm):
    name = "fast"
    description = "Corner elimination + quadrant scans, expected O(N)"

    def __init__(self, options: Optional[FastDiameterOptions] = None):
        self.options = options or FastDiameterOptions()

    def compute(self, points: PointSet) -> DiameterReport:
        return fast_diameter(points, self.options)


fast_algorithm = FastDiameterAlgorithm()
