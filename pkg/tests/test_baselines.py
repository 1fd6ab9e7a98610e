"""Brute-force oracle and the convex hull + rotating calipers baseline."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algorithms import brute_force_diameter, convex_hull, hull_diameter
from core.errors import TooFewPointsError
from core.geometry import squared_distance
from core.point_set import PointSet
from datagen import PointSource, generate
from tests.helpers import UNIFORM_1000_SQ_DIST, UNIFORM_1000_WITNESS, gift_wrap, nested_loop_diameter


# =============================================================================
# BRUTE FORCE
# =============================================================================

class TestBruteForce:
    def test_unit_square_diagonal(self, unit_square):
        report = brute_force_diameter(unit_square)
        assert report.sq_dist == 2.0
        assert report.witness == (0, 3)
        assert report.counters.pair_evals == 6

    def test_two_points(self):
        report = brute_force_diameter(PointSet.from_points([(0, 0), (3, 4)]))
        assert report.sq_dist == 25.0
        assert report.dist == 5.0
        assert report.witness == (0, 1)

    def test_coincident_points_report_first_pair(self):
        report = brute_force_diameter(PointSet.from_points([(2, 2)] * 5))
        assert report.sq_dist == 0.0
        assert report.witness == (0, 1)

    @pytest.mark.parametrize("n", [0, 1])
    def test_too_few_points(self, n):
        with pytest.raises(TooFewPointsError):
            brute_force_diameter(PointSet.from_points([(1, 1)] * n))

    @pytest.mark.parametrize("kind, n, seed", [
        ("uniform", 200, 42),
        ("gaussian", 150, 9),
        ("clustered", 120, 3),
    ])
    def test_matches_scalar_double_loop(self, kind, n, seed):
        points = generate(PointSource(kind, n, seed))
        expected_sq, expected_witness = nested_loop_diameter(points.as_tuples())
        report = brute_force_diameter(points)
        assert report.sq_dist == expected_sq
        assert report.witness == expected_witness
        assert report.counters.pair_evals == n * (n - 1) // 2

    def test_witness_attains_the_distance(self, uniform_1000):
        report = brute_force_diameter(uniform_1000)
        i, j = report.witness
        assert squared_distance(uniform_1000[i], uniform_1000[j]) == report.sq_dist
        assert report.counters.pair_evals == 1000 * 999 // 2

    def test_recorded_uniform_1000_result(self, uniform_1000):
        report = brute_force_diameter(uniform_1000)
        assert report.sq_dist == UNIFORM_1000_SQ_DIST
        assert report.witness == UNIFORM_1000_WITNESS


# =============================================================================
# CONVEX HULL
# =============================================================================

def _orientation(points: PointSet, a: int, b: int, c: int) -> float:
    pa, pb, pc = points[a], points[b], points[c]
    return (pb.x - pa.x) * (pc.y - pa.y) - (pb.y - pa.y) * (pc.x - pa.x)


class TestConvexHull:
    def test_interior_point_excluded(self):
        points = PointSet.from_points([(0, 0), (1, 0), (0, 1), (1, 1), (0.5, 0.5)])
        hull = convex_hull(points)
        assert sorted(hull.vertices) == [0, 1, 2, 3]
        assert hull.vertices == (0, 1, 3, 2)  # counterclockwise from (0, 0)

    def test_collinear_keeps_endpoints(self, collinear_four):
        assert convex_hull(collinear_four).vertices == (0, 3)

    def test_coincident_collapses_to_one_vertex(self):
        assert convex_hull(PointSet.from_points([(1, 2)] * 4)).vertices == (0,)

    def test_matches_gift_wrapping(self):
        points = generate(PointSource("uniform", 100, 7))
        assert list(convex_hull(points).vertices) == gift_wrap(points.as_tuples())

    @settings(max_examples=50, deadline=None)
    @given(
        kind=st.sampled_from(["uniform", "gaussian", "clustered"]),
        n=st.integers(min_value=3, max_value=200),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    def test_strictly_convex_and_contains_every_point(self, kind, n, seed):
        points = generate(PointSource(kind, n, seed))
        v = convex_hull(points).vertices
        m = len(v)
        assert 1 <= m <= n
        if m < 3:
            return
        for k in range(m):
            assert _orientation(points, v[k], v[(k + 1) % m], v[(k + 2) % m]) > 0
        for p in range(n):
            for k in range(m):
                assert _orientation(points, v[k], v[(k + 1) % m], p) >= -1e-12


class TestHullDiameter:
    def test_unit_square(self, unit_square):
        assert hull_diameter(unit_square).sq_dist == 2.0

    def test_two_points(self):
        report = hull_diameter(PointSet.from_points([(0, 0), (3, 4)]))
        assert report.sq_dist == 25.0
        assert report.counters.pair_evals == 1

    def test_coincident(self):
        report = hull_diameter(PointSet.from_points([(7, 7)] * 3))
        assert report.sq_dist == 0.0
        assert report.witness == (0, 1)

    def test_too_few_points(self):
        with pytest.raises(TooFewPointsError):
            hull_diameter(PointSet.from_points([(0, 0)]))

    def test_matches_brute_force_fixture(self, uniform_1000):
        hull_report = hull_diameter(uniform_1000)
        assert hull_report.sq_dist == UNIFORM_1000_SQ_DIST
        assert hull_report.witness == UNIFORM_1000_WITNESS
        assert hull_report.counters.pair_evals <= 2 * len(convex_hull(uniform_1000))

    @pytest.mark.parametrize("kind", ["uniform", "circle", "gaussian", "clustered"])
    def test_oracle_equivalence_over_seeds(self, kind):
        for seed in range(200):
            n = 2 + (seed * 37) % 511
            src = PointSource(kind, n, seed, jitter=1e-3 if kind == "circle" else 0.0)
            points = generate(src)
            expected = brute_force_diameter(points).dist
            assert hull_diameter(points).dist == pytest.approx(expected, rel=1e-12, abs=0), src.describe()

    def test_integer_inputs_are_exact(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            pts = rng.integers(-50, 50, size=(rng.integers(2, 80), 2))
            points = PointSet.from_points(pts.tolist())
            assert hull_diameter(points).sq_dist == brute_force_diameter(points).sq_dist
