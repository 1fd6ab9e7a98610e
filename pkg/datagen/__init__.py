"""
Datagen - deterministic point clouds for verification and benchmarks
"""
from .prng import SplitMix64
from .sources import PointSource, generate, KINDS, GENERATED_KINDS

__all__ = [
    'SplitMix64',
    'PointSource',
    'generate',
    'KINDS',
    'GENERATED_KINDS',
]
