"""
Algorithms - brute-force oracle, hull baseline and the fast elimination pipeline
"""
from .base import DiameterAlgorithm
from .registry import AlgorithmRegistry, algorithm_registry
from .report import DiameterReport, PhaseCounters
from .brute_force import brute_force_diameter, brute_force_algorithm
from .hull import HullPolygon, convex_hull, hull_diameter, hull_algorithm
from .fast import (
    FastDiameterAlgorithm,
    FastDiameterOptions,
    PipelineTrace,
    fast_diameter,
    fast_algorithm,
)

# Registration order is the column order of verify lines and benchmarks
for _algorithm in (brute_force_algorithm, hull_algorithm, fast_algorithm):
    algorithm_registry.register(_algorithm)

__all__ = [
    'DiameterAlgorithm',
    'AlgorithmRegistry',
    'algorithm_registry',
    'DiameterReport',
    'PhaseCounters',
    'brute_force_diameter',
    'HullPolygon',
    'convex_hull',
    'hull_diameter',
    'FastDiameterAlgorithm',
    'FastDiameterOptions',
    'PipelineTrace',
    'fast_diameter',
]
