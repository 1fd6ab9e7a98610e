"""
Diameter Report

Result of every diameter algorithm: exact squared distance, its root,
a witness pair and the phase counters used to check complexity claims
without relying on wall-clock.
"""
import math
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, Tuple

from core.geometry import SqDist


@dataclass
class PhaseCounters:
    pair_evals: int = 0  # point-pair evaluations in scans, each unordered pair at most once
    corner_evals: int = 0
    candidate_pair_evals: int = 0
    eliminated_preprocess: int = 0
    eliminated_runtime: int = 0
    survivors: Tuple[int, int, int, int] = (0, 0, 0, 0)
    adjacent_scans_run: int = 0
    gates_skipped: int = 0
    early_exit: bool = False

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["survivors"] = list(self.survivors)
        return data


@dataclass(frozen=True)
class DiameterReport:
    sq_dist: SqDist
    witness: Tuple[int, int]
    counters: PhaseCounters = field(default_factory=PhaseCounters)

    @classmethod
    def build(cls, sq_dist: SqDist, i: int, j: int, counters: PhaseCounters) -> "DiameterReport":
        """Witness is stored with the smaller index first."""
        return cls(float(sq_dist), (min(i, j), max(i, j)), counters)

    @property
    def dist(self) -> float:
        return math.sqrt(self.sq_dist)

    def as_dict(self) -> Dict[str, Any]:
        """Flat mapping used by `run --json`."""
        return {
            "dist": self.dist,
            "sq_dist": self.sq_dist,
            "witness_i": self.witness[0],
            "witness_j": self.witness[1],
            **self.counters.as_dict(),
        }
