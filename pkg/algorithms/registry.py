"""
Algorithm Registry

Holds the diameter algorithms by name. CLI, verification and benchmarks
resolve algorithms only through here.
"""
import logging
from typing import Dict, List

from core.errors import BadParameterError
from .base import DiameterAlgorithm

logger = logging.getLogger(__name__)


class AlgorithmRegistry:
    """
    Manages registered diameter algorithms.

    Features:
    - Registration order is preserved (it is the column order of reports)
    - Lookup by name with a descriptive error listing known names
    """

    def __init__(self):
        self.algorithms: Dict[str, DiameterAlgorithm] = {}

    def register(self, algorithm: DiameterAlgorithm):
        """Register an algorithm instance."""
        if algorithm.name in self.algorithms:
            logger.warning(f"Algorithm '{algorithm.name}' already registered, replacing...")
        self.algorithms[algorithm.name] = algorithm
        logger.debug(f"Registered algorithm: {algorithm.name} v{algorithm.version}")

    def get(self, name: str) -> DiameterAlgorithm:
        """Get a registered algorithm by name."""
        try:
            return self.algorithms[name]
        except KeyError:
            known = ", ".join(self.names())
            raise BadParameterError(f"Unknown algorithm '{name}' (known: {known})") from None

    def get_all(self) -> List[DiameterAlgorithm]:
        return list(self.algorithms.values())

    def names(self) -> List[str]:
        return list(self.algorithms)

    def resolve(self, names: List[str]) -> Dict[str, DiameterAlgorithm]:
        """Map a list of names to instances, keeping the caller's order."""
        return {name: self.get(name) for name in names}


# Global singleton
algorithm_registry = AlgorithmRegistry()
