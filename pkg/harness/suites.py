"""
Verification suites

A case is a label plus a loader, so generated sources and hand-built
degenerate sets run through the same differential check. Degenerate
builders draw from SplitMix64 too and reproduce across runs.
"""
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, List

import numpy as np

from core.errors import BadParameterError
from core.point_set import PointSet
from datagen import PointSource, SplitMix64, generate

SUITE_SIZES = (2, 3, 10, 100, 512)
SUITE_ASPECTS = (1.0, 10.0, 1000.0)
SUITE_SEEDS = {
    "quick": range(1, 6),
    "default": range(1, 51),
}
# Small enough to keep squared distances exact in double precision
GRID_SPAN = 64


@dataclass(frozen=True)
class VerifyCase:
    label: str
    load: Callable[[], PointSet]
    exact: bool = False  # coordinates are small dyadic values: results must agree bitwise

    @classmethod
    def from_source(cls, src: PointSource) -> "VerifyCase":
        return cls(src.describe(), partial(generate, src))


# === Degenerate builders ===

def coincident_points(n: int, seed: int) -> PointSet:
    x, y = SplitMix64(seed).uniform(2)
    return PointSet(np.full(n, x), np.full(n, y))


def collinear_points(n: int, seed: int) -> PointSet:
    """Integer points on y = 2x + 1."""
    xs = np.floor(SplitMix64(seed).uniform(n) * GRID_SPAN)
    return PointSet(xs, 2.0 * xs + 1.0)


def two_points(seed: int) -> PointSet:
    u = SplitMix64(seed).uniform(4)
    return PointSet(u[0::2], u[1::2])


def duplicate_heavy_points(n: int, seed: int) -> PointSet:
    """Uniform points snapped to a 1/4 grid over [0, 2]^2: at most 81 distinct positions."""
    u = SplitMix64(seed).uniform(2 * n)
    snapped = np.floor(u * 8.0) / 4.0
    return PointSet(snapped[0::2], snapped[1::2])


def integer_grid_points(n: int, seed: int) -> PointSet:
    u = SplitMix64(seed).uniform(2 * n)
    grid = np.floor(u * GRID_SPAN)
    return PointSet(grid[0::2], grid[1::2])


# === Suites ===

def build_suite(name: str = "default") -> List[VerifyCase]:
    """
    Every generated kind at every suite size, uniform at three aspects,
    circles at even and odd n, plus the degenerate sets.
    """
    if name not in SUITE_SEEDS:
        raise BadParameterError(f"Unknown suite '{name}' (known: {', '.join(SUITE_SEEDS)})")

    cases: List[VerifyCase] = []

    # Exact circles do not depend on the seed
    for n in sorted({n + k for n in SUITE_SIZES for k in (0, 1)}):
        cases.append(VerifyCase.from_source(PointSource("circle", n)))

    for seed in SUITE_SEEDS[name]:
        cases.append(VerifyCase(f"two-point(seed={seed})", partial(two_points, seed)))
        for n in SUITE_SIZES:
            cases.extend(_seeded_cases(n, seed))
    return cases


def _seeded_cases(n: int, seed: int) -> Iterable[VerifyCase]:
    for aspect in SUITE_ASPECTS:
        yield VerifyCase.from_source(PointSource("uniform", n, seed, aspect))
    yield VerifyCase.from_source(PointSource("gaussian", n, seed))
    yield VerifyCase.from_source(PointSource("clustered", n, seed))
    yield VerifyCase.from_source(PointSource("circle", n, seed, jitter=1e-6))
    yield VerifyCase(f"coincident(n={n}, seed={seed})", partial(coincident_points, n, seed))
    yield VerifyCase(f"collinear(n={n}, seed={seed})", partial(collinear_points, n, seed), exact=True)
    yield VerifyCase(f"duplicate-heavy(n={n}, seed={seed})", partial(duplicate_heavy_points, n, seed), exact=True)
    yield VerifyCase(f"integer-grid(n={n}, seed={seed})", partial(integer_grid_points, n, seed), exact=True)
