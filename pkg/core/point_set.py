"""
Point Set

Coordinates are stored as two flat float64 arrays (one per axis), never as
a 2D grid. Index k is the stable identity of the k-th point.
"""
import logging
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

from .errors import NonFiniteInputError, TooFewPointsError
from .geometry import Point2

logger = logging.getLogger(__name__)


class PointSet:
    """Immutable, validated sequence of 2D points."""

    __slots__ = ("xs", "ys")

    def __init__(self, xs, ys, *, where: str = ""):
        xs = np.array(xs, dtype=np.float64).reshape(-1)
        ys = np.array(ys, dtype=np.float64).reshape(-1)
        if xs.shape != ys.shape:
            raise ValueError(f"Coordinate arrays differ in length: {xs.size} != {ys.size}")

        finite = np.isfinite(xs) & np.isfinite(ys)
        if not finite.all():
            bad = int(np.argmin(finite))
            raise NonFiniteInputError(bad, float(xs[bad]), float(ys[bad]), where)

        xs.setflags(write=False)
        ys.setflags(write=False)
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]], *, where: str = "") -> "PointSet":
        pairs = [(float(p[0]), float(p[1])) for p in points]
        if not pairs:
            return cls.empty()
        xs, ys = zip(*pairs)
        return cls(xs, ys, where=where)

    @classmethod
    def empty(cls) -> "PointSet":
        return cls(np.empty(0), np.empty(0))

    def __len__(self) -> int:
        return int(self.xs.size)

    def __getitem__(self, index: int) -> Point2:
        return Point2(float(self.xs[index]), float(self.ys[index]))

    def __iter__(self) -> Iterator[Point2]:
        for x, y in zip(self.xs.tolist(), self.ys.tolist()):
            yield Point2(x, y)

    def __eq__(self, other) -> bool:
        """Bitwise equality of both coordinate arrays."""
        if not isinstance(other, PointSet):
            return NotImplemented
        return (
            self.xs.shape == other.xs.shape
            and self.xs.tobytes() == other.xs.tobytes()
            and self.ys.tobytes() == other.ys.tobytes()
        )

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)})"

    def as_tuples(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(zip(self.xs.tolist(), self.ys.tolist()))

    def require_pairs(self):
        """Entry check of every diameter query."""
        if len(self) < 2:
            raise TooFewPointsError(len(self))
