from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varnash import (
    Ball,
    Box,
    DimensionError,
    FeasibilityError,
    ProductSet,
    Simplex,
    check_stationarity,
    distance,
    normal_cone_check,
    project,
    simplex_grid,
    variational_check,
)


def grid_projection_2d(x, points=10_000):
    """Brute-force nearest point on the 2-simplex over an evenly spaced grid."""
    t = np.linspace(0.0, 1.0, points)
    cand = np.stack([t, 1 - t], axis=1)
    return cand[np.argmin(((cand - x) ** 2).sum(axis=1))]


def bisection_projection(x, iters=200):
    """Simplex projection via bisection on the threshold of sum(max(x - t, 0)) = 1."""
    lo, hi = x.min() - 1.0, x.max()
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if np.maximum(x - mid, 0).sum() > 1:
            lo = mid
        else:
            hi = mid
    return np.maximum(x - 0.5 * (lo + hi), 0)


SETS = [
    Simplex(1),
    Simplex(4),
    Box([-1.0, 0.0, 2.0], [1.0, 0.5, 2.0]),
    Ball([1.0, -2.0], 0.5),
]


class TestProject:
    def test_symmetric_point(self):
        np.testing.assert_allclose(project(Simplex(2), [0.3, 0.3]), [0.5, 0.5], atol=1e-15)

    def test_far_point(self):
        x = np.array([2.0, 0.0])
        assert np.abs(grid_projection_2d(x) - [1, 0]).max() < 1e-4
        np.testing.assert_array_equal(project(Simplex(2), x), [1.0, 0.0])

    def test_ball_rescale(self):
        np.testing.assert_allclose(project(Ball([0, 0], 1), [3, 4]), [0.6, 0.8], atol=1e-15)

    def test_box_clamps(self):
        np.testing.assert_array_equal(project(Box([0, 0], [1, 2]), [-3, 5]), [0, 2])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            project(Simplex(3), [1.0, 2.0])

    def test_matches_grid_oracle(self, rng):
        for x in rng.uniform(-2, 2, size=(50, 2)):
            np.testing.assert_allclose(project(Simplex(2), x), grid_projection_2d(x), atol=2e-4)

    def test_matches_bisection_oracle(self, rng):
        for _ in range(300):
            x = rng.normal(scale=3, size=rng.integers(1, 12))
            np.testing.assert_allclose(project(Simplex(x.size), x), bisection_projection(x), atol=1e-12)

    def test_ties_are_deterministic(self):
        x = np.array([0.4, 0.4, 0.4, -1.0])
        a = project(Simplex(4), x)
        np.testing.assert_allclose(a, [1 / 3, 1 / 3, 1 / 3, 0], atol=1e-15)
        assert a.tobytes() == project(Simplex(4), x.copy()).tobytes()

    def test_product_factorizes(self, rng):
        P = ProductSet(Simplex(3), Ball([0, 0], 2.0))
        for _ in range(50):
            x, y = rng.normal(size=3), rng.normal(scale=3, size=2)
            px, py = P.project(x, y)
            assert px.tobytes() == project(P.first, x).tobytes()
            assert py.tobytes() == project(P.second, y).tobytes()


class TestDistance:
    @pytest.mark.parametrize("S", SETS, ids=lambda s: type(s).__name__)
    def test_member_has_zero_distance(self, S, rng):
        assert distance(S, S.random_point(rng)) == 0

    def test_simplex(self):
        assert distance(Simplex(2), [2, 0]) == 1

    def test_ball(self):
        assert distance(Ball([0, 0], 1), [3, 4]) == 4


class TestVariationalCheck:
    def test_correct_projection(self):
        assert variational_check(Simplex(2), [2, 0], [1, 0], 1e-12)

    def test_wrong_projection(self):
        # vertex (1,0): <(1.5,-0.5), (0.5,-0.5)> = 1
        assert not variational_check(Simplex(2), [2, 0], [0.5, 0.5], 1e-12)

    @pytest.mark.parametrize("S", SETS, ids=lambda s: type(s).__name__)
    def test_member_projects_to_itself(self, S, rng):
        x = S.random_point(rng)
        assert variational_check(S, x, x, 1e-12)

    def test_infeasible_candidate(self):
        assert not variational_check(Ball([0, 0], 1), [3, 4], [3, 4], 1e-12)

    def test_high_dimensional_box(self, rng):
        lo = -rng.uniform(size=40)
        hi = rng.uniform(size=40)
        S = Box(lo, hi)
        x = rng.normal(scale=2, size=40)
        assert variational_check(S, x, project(S, x))
        w = project(S, x).copy()
        w[0] = 0.5 * (lo[0] + hi[0]) if w[0] != 0.5 * (lo[0] + hi[0]) else lo[0]
        assert not variational_check(S, x, w)


class TestNormalCone:
    def test_vertex_outward(self):
        assert normal_cone_check(Simplex(2), [1, 0], [1, -1], 1e-10)

    @pytest.mark.parametrize("S", SETS, ids=lambda s: type(s).__name__)
    def test_zero_vector(self, S, rng):
        assert normal_cone_check(S, S.barycenter(), np.zeros(S.dim), 1e-10)

    def test_not_normal(self):
        assert not normal_cone_check(Simplex(2), [0.5, 0.5], [1, 0], 1e-10)

    def test_infeasible_base_point(self):
        with pytest.raises(FeasibilityError):
            normal_cone_check(Simplex(2), [2, 0], [0, 0])


class TestStationarity:
    def test_linear_program_optimum(self):
        assert check_stationarity([1, 2], Simplex(2), [1, 0], 1e-10)

    def test_linear_program_wrong_vertex(self):
        assert not check_stationarity([1, 2], Simplex(2), [0, 1], 1e-10)

    def test_interior_zero_gradient(self):
        assert check_stationarity([0, 0, 0], Simplex(3), [0.2, 0.3, 0.5], 1e-10)

    def test_agrees_with_vertex_inspection(self, rng):
        for _ in range(100):
            c = rng.normal(size=4)
            best = np.eye(4)[np.argmin(c)]
            other = np.eye(4)[np.argmax(c)]
            assert check_stationarity(c, Simplex(4), best)
            assert not check_stationarity(c, Simplex(4), other)


class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=10))
    def test_simplex_idempotent_and_feasible(self, x):
        S = Simplex(len(x))
        p = project(S, x)
        assert S.contains(p, 1e-12)
        np.testing.assert_allclose(project(S, p), p, atol=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 8).flatmap(
        lambda d: st.tuples(*(st.lists(st.floats(-50, 50), min_size=d, max_size=d) for _ in range(2)))))
    def test_simplex_nonexpansive(self, xy):
        x, y = np.array(xy[0]), np.array(xy[1])
        S = Simplex(x.size)
        assert np.linalg.norm(project(S, x) - project(S, y)) <= np.linalg.norm(x - y) + 1e-12


class TestSimplexGrid:
    @pytest.mark.parametrize("d, k", [(1, 5), (2, 2), (3, 20), (4, 7)])
    def test_count_and_membership(self, d, k):
        G = simplex_grid(d, k)
        assert G.shape == (comb(k + d - 2, d - 1), d)
        np.testing.assert_allclose(G.sum(axis=1), 1)
        assert G.min() >= 0
        for v in np.eye(d):
            assert np.any(np.all(G == v, axis=1))
