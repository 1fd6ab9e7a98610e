"""
Point Sources - seeded, deterministic point-cloud generators

Identical (kind, n, seed, aspect, jitter, sigma) reproduce bit-identical
point sequences. Stream order per kind (see prng.SplitMix64):

    uniform    2n doubles;  x = aspect*u[2k], y = u[2k+1]
    circle     angle 2*pi*k/n on the unit circle; with jitter > 0, n doubles
               give radius 1 + jitter*(2u - 1)
    gaussian   2n normals;  x = z[2k], y = z[2k+1]
    clustered  16 doubles -> 8 centers in [0, aspect] x [0, 1],
               n doubles  -> label floor(8u),
               2n normals -> offsets scaled by sigma
"""
import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from core.errors import BadParameterError
from core.point_set import PointSet
from .prng import SplitMix64

logger = logging.getLogger(__name__)

KINDS = ("uniform", "circle", "gaussian", "clustered", "file")
GENERATED_KINDS = KINDS[:-1]
CLUSTER_COUNT = 8


@dataclass(frozen=True)
class PointSource:
    kind: str
    n: int = 0
    seed: int = 0
    aspect: float = 1.0
    jitter: float = 0.0   # circle only
    sigma: float = 0.05   # clustered only
    path: Optional[str] = None
    format: Optional[str] = None  # file only; None infers from the extension

    @classmethod
    def from_file(cls, path: str, format: Optional[str] = None) -> "PointSource":
        return cls("file", path=str(path), format=format)

    def with_seed(self, seed: int) -> "PointSource":
        return replace(self, seed=seed)

    def describe(self) -> str:
        """Stable label used in verification lines and logs."""
        if self.kind == "file":
            return f"file({self.path})"
        extra = ""
        if self.kind == "circle" and self.jitter:
            extra = f", jitter={self.jitter:g}"
        elif self.kind == "clustered":
            extra = f", sigma={self.sigma:g}"
        return f"{self.kind}(n={self.n}, seed={self.seed}, aspect={self.aspect:g}{extra})"

    def validate(self):
        if self.kind not in KINDS:
            raise BadParameterError(f"Unknown point source kind '{self.kind}' (known: {', '.join(KINDS)})")
        if self.kind == "file":
            if not self.path:
                raise BadParameterError("File source needs a path")
            return
        if self.n < 1:
            raise BadParameterError(f"Point count must be positive, got {self.n}")
        if not self.aspect > 0:
            raise BadParameterError(f"Aspect must be positive, got {self.aspect}")
        if self.seed < 0 or self.seed >= 1 << 64:
            raise BadParameterError(f"Seed must fit an unsigned 64-bit integer, got {self.seed}")
        if self.jitter < 0 or self.sigma < 0:
            raise BadParameterError("Jitter and sigma must be non-negative")


def generate(src: PointSource) -> PointSet:
    """Materialize a point source."""
    src.validate()
    if src.kind == "file":
        from utils.point_io import read_points
        return read_points(src.path, src.format)

    rng = SplitMix64(src.seed)
    n = src.n

    if src.kind == "uniform":
        u = rng.uniform(2 * n)
        xs, ys = src.aspect * u[0::2], u[1::2]

    elif src.kind == "circle":
        theta = 2.0 * np.pi * np.arange(n, dtype=np.float64) / n
        radius = 1.0
        if src.jitter > 0:
            radius = 1.0 + src.jitter * (2.0 * rng.uniform(n) - 1.0)
        xs, ys = radius * np.cos(theta), radius * np.sin(theta)

    elif src.kind == "gaussian":
        z = rng.normal(2 * n)
        xs, ys = z[0::2], z[1::2]

    else:  # clustered
        c = rng.uniform(2 * CLUSTER_COUNT)
        cx, cy = src.aspect * c[0::2], c[1::2]
        labels = np.minimum((rng.uniform(n) * CLUSTER_COUNT).astype(np.intp), CLUSTER_COUNT - 1)
        z = rng.normal(2 * n)
        xs = cx[labels] + src.sigma * z[0::2]
        ys = cy[labels] + src.sigma * z[1::2]

    logger.debug(f"Generated {src.describe()}")
    return PointSet(xs, ys, where=src.describe())
