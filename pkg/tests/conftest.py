"""Shared fixtures. The project root goes on sys.path for the flat package layout."""
import sys
from pathlib import Path

import pytest

root_dir = Path(__file__).resolve().parent.parent
if str(root_dir) not in sys.path:
    sys.path.insert(0, str(root_dir))

from core.point_set import PointSet  # noqa: E402
from datagen import PointSource, generate  # noqa: E402


@pytest.fixture
def unit_square() -> PointSet:
    return PointSet.from_points([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def collinear_four() -> PointSet:
    return PointSet.from_points([(0, 0), (1, 0), (2, 0), (5, 0)])


@pytest.fixture
def uniform_1000() -> PointSet:
    return generate(PointSource("uniform", 1000, 42))
