"""Independent reference checks used across the test modules."""
from typing import List, Sequence, Tuple

import numpy as np


def brute_pairs_max(xs: np.ndarray, ys: np.ndarray, rows, cols) -> float:
    """Max squared distance over rows x cols, 0.0 when either side is empty."""
    rows, cols = np.asarray(rows, dtype=np.intp), np.asarray(cols, dtype=np.intp)
    if rows.size == 0 or cols.size == 0:
        return 0.0
    dx = xs[rows][:, None] - xs[cols][None, :]
    dy = ys[rows][:, None] - ys[cols][None, :]
    return float((dx * dx + dy * dy).max())


def nested_loop_diameter(pts: Sequence[Tuple[float, float]]) -> Tuple[float, Tuple[int, int]]:
    """Plain double loop, first strictly improving pair wins."""
    best, witness = -1.0, (0, 1)
    for i in range(len(pts) - 1):
        for j in range(i + 1, len(pts)):
            dx = pts[i][0] - pts[j][0]
            dy = pts[i][1] - pts[j][1]
            sq = dx * dx + dy * dy
            if sq > best:
                best, witness = sq, (i, j)
    return best, witness


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _sq(p, q) -> float:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def gift_wrap(pts: Sequence[Tuple[float, float]]) -> List[int]:
    """
    Jarvis march, counterclockwise from the lowest (x, y) point, collinear
    points dropped. Quadratic; only for distinct points.
    """
    n = len(pts)
    start = min(range(n), key=lambda k: (pts[k][0], pts[k][1], k))
    hull, p = [], start
    while True:
        hull.append(p)
        q = (p + 1) % n
        for r in range(n):
            if r == p:
                continue
            c = _cross(pts[p], pts[q], pts[r])
            if c < 0 or (c == 0 and _sq(pts[p], pts[r]) > _sq(pts[p], pts[q])):
                q = r
        p = q
        if p == start or len(hull) > n:
            return hull


def splitmix64_reference(seed: int, count: int) -> List[int]:
    """Scalar SplitMix64 on Python ints, independent of numpy."""
    mask = (1 << 64) - 1
    state, out = seed & mask, []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


# Brute-force oracle on generate(PointSource("uniform", 1000, 42)).
# The pair is (0x1.37568aa6f702p-6, 0x1.80233c8654aap-6) to
# (0x1.eb76cbe862826p-1, 0x1.fc9f89f72f88dp-1); no other pair ties.
UNIFORM_1000_SQ_DIST = float.fromhex("0x1.d37aabc871645p+0")
UNIFORM_1000_WITNESS = (314, 510)
