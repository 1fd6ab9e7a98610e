"""
Diameter Algorithm Base Class

This is the contract that every algorithm plugin implements.
"""
from abc import ABC, abstractmethod
import logging

from core.point_set import PointSet
from .report import DiameterReport

logger = logging.getLogger(__name__)


class DiameterAlgorithm(ABC):
    """
    Base class for diameter algorithms.

    Subclasses wrap one module-level operation (brute_force_diameter,
    hull_diameter, fast_diameter) and export a single instance, which the
    registry picks up:

        class BruteForceAlgorithm(DiameterAlgorithm):
            name = "brute"

            def compute(self, points):
                return brute_force_diameter(points)

        brute_force_algorithm = BruteForceAlgorithm()
    """

    # === REQUIRED: Override in subclasses ===
    name: str = "base"
    version: str = "1.0.0"
    description: str = "Base algorithm"

    # === OPTIONAL ===
    # Quadratic algorithms are capped by BRUTE_N_MAX in benchmarks
    quadratic: bool = False

    @abstractmethod
    def compute(self, points: PointSet) -> DiameterReport:
        """Exact diameter of a validated point set with N >= 2."""

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self.name} v{self.version}>"
