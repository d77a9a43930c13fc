import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from varnash import (
    CertificateKind,
    GridError,
    GridFunction,
    Infeasible,
    SolverConfig,
    Witness,
    ZeroSumGame,
    check_saddle,
    JointStrategy,
    dual_witness,
    extract_saddle,
    minimax_gap_bilinear,
    weak_duality_gap,
    zero_sum_value,
)

PENNIES = [[1.0, -1.0], [-1.0, 1.0]]


class TestWeakDuality:
    def test_pennies_table(self):
        assert weak_duality_gap(GridFunction(PENNIES)) == (-1, 1, 2)

    def test_constant(self):
        assert weak_duality_gap(GridFunction(np.full((3, 4), 2.5))) == (2.5, 2.5, 0)

    def test_rnd_row_table(self):
        assert weak_duality_gap(GridFunction([[50, 100], [-50, 0]])) == (50, 50, 0)

    def test_empty_grid(self):
        with pytest.raises(GridError):
            GridFunction(np.zeros((0, 3)))

    @settings(max_examples=300, deadline=None)
    @given(arrays(float, st.tuples(st.integers(1, 6), st.integers(1, 6)), elements=st.floats(-1e6, 1e6)))
    def test_gap_nonnegative(self, V):
        assert weak_duality_gap(GridFunction(V))[2] >= -1e-12

    def test_pure_saddle_closes_gap(self, rng):
        for _ in range(200):
            m, n = rng.integers(1, 6, size=2)
            V = rng.normal(size=(m, n))
            i, j = rng.integers(m), rng.integers(n)
            # make (i, j) the row minimum and the column maximum
            s = rng.normal()
            V[i, :] = s + np.abs(V[i, :])
            V[:, j] = s - np.abs(V[:, j])
            V[i, j] = s
            assert check_saddle(ZeroSumGame(V), JointStrategy(np.eye(m)[i], np.eye(n)[j]), 1e-12)[0]
            assert weak_duality_gap(GridFunction(V))[2] <= 1e-12

    def test_tabulate_bilinear(self):
        A = np.array([[1.0, 2.0], [0.0, -1.0]])
        g = GridFunction.bilinear(A, k=3)
        assert g.values.shape == (3, 3)
        h = GridFunction.tabulate(lambda x, y: x @ A @ y, g.x_nodes, g.y_nodes)
        np.testing.assert_allclose(h.values, g.values)


class TestMinimaxGap:
    def test_pennies(self):
        assert minimax_gap_bilinear(ZeroSumGame(PENNIES)) <= 1e-6

    def test_one_by_one(self):
        assert minimax_gap_bilinear(ZeroSumGame([[4.0]])) == 0

    def test_random_3x3(self):
        rng = np.random.default_rng(7)
        A = rng.uniform(-1, 1, (3, 3))
        from varnash import solve_zero_sum
        assert minimax_gap_bilinear(ZeroSumGame(A)) <= 1e-6
        assert abs(solve_zero_sum(ZeroSumGame(A)).u1 - zero_sum_value(ZeroSumGame(A))) <= 1e-5


class TestExtractSaddle:
    def test_pennies(self):
        z, cert = extract_saddle(ZeroSumGame(PENNIES))
        np.testing.assert_allclose(z.concat(), 0.5, atol=1e-4)
        assert cert.kind is CertificateKind.SADDLE_CHECK and cert.value <= 1e-6 and cert.accepted

    def test_diag(self, diag):
        z, cert = extract_saddle(diag)
        np.testing.assert_allclose(z.p, [1 / 3, 2 / 3], atol=1e-4)
        np.testing.assert_allclose(z.q, [1 / 3, 2 / 3], atol=1e-4)
        assert cert.value <= 1e-6

    def test_one_by_one(self):
        z, cert = extract_saddle(ZeroSumGame([[-2.0]]))
        assert z.p.tolist() == [1] and cert.value == 0


class TestDualWitness:
    def test_pennies_positive_alpha(self):
        w = dual_witness(GridFunction(PENNIES), 0.1)
        assert isinstance(w, Witness) and w.valid
        np.testing.assert_allclose(w.beta, [0.5, 0.5], atol=1e-4)
        assert w.guarantee <= 0.1

    def test_pennies_negative_alpha(self):
        w = dual_witness(GridFunction(PENNIES), -0.5)
        assert isinstance(w, Infeasible)
        # certified by a row mix whose worst column payoff exceeds alpha
        assert w.lower_bound > -0.5
        assert (np.array(PENNIES).T @ w.row_mix).min() == pytest.approx(w.lower_bound)

    def test_single_column(self):
        w = dual_witness(GridFunction([[-1.0], [-2.0]]), 0.0)
        assert w.beta.tolist() == [1.0] and w.guarantee == -1

    def test_row_violation(self):
        w = dual_witness(GridFunction([[1.0, 2.0], [-3.0, 0.0]]), 0.5)
        assert isinstance(w, Infeasible) and w.row == 0

    def test_soundness_random(self, rng):
        for _ in range(40):
            V = rng.uniform(-1, 1, (rng.integers(1, 5), rng.integers(1, 5)))
            value = zero_sum_value(ZeroSumGame(V))
            for alpha in (value - 0.2, value + 0.2):
                w = dual_witness(GridFunction(V), alpha)
                if isinstance(w, Witness):
                    assert (V @ w.beta).max() == w.guarantee <= alpha + w.tol
                    assert abs(w.beta.sum() - 1) < 1e-12 and w.beta.min() >= 0
                elif w.row is not None:
                    assert V[w.row].min() >= alpha
                else:
                    assert (V.T @ w.row_mix).min() > alpha
            assert isinstance(dual_witness(GridFunction(V), value + 0.2), Witness)
            assert isinstance(dual_witness(GridFunction(V), value - 0.2), Infeasible)

    def test_monotone_in_alpha(self, rng):
        for _ in range(10):
            V = rng.uniform(-1, 1, (3, 3))
            ok = [isinstance(dual_witness(GridFunction(V), a), Witness)
                  for a in np.linspace(1.5, -1.5, 25)]
            # success is a prefix of the decreasing sweep
            assert ok == sorted(ok, reverse=True)

    def test_mixed_column_matches_weighted_sum(self):
        A = np.array([[0.0, 2.0, -1.0], [1.0, -1.0, 0.5]])
        g = GridFunction.bilinear(A, k=6)
        w = dual_witness(g, 0.6, SolverConfig(tol=1e-8))
        assert isinstance(w, Witness)
        ybar = sum(b * y for b, y in zip(w.beta, g.y_nodes))
        for i, x in enumerate(g.x_nodes):
            assert x @ A @ ybar == pytest.approx(g.values[i] @ w.beta, abs=1e-12)
