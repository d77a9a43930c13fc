"""Minimax equality on finite grids and bilinear games.

A :class:`GridFunction` tabulates ``f(x_i, y_j)`` on finitely many nodes.  On
such a table weak duality (max-min <= min-max) always holds; equality needs
mixing.  :func:`dual_witness` produces the convex weights ``beta`` over the
column nodes that cap every row at a level ``alpha``, which is how a
separation argument turns "every x is beaten by some y_j" into one mixed y.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridError
from .game import Certificate, CertificateKind, ZeroSumGame, check_saddle
from .geometry import as_vec, simplex_grid
from .solvers import SolverConfig, solve_zero_sum

ALPHA_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class GridFunction:
    values: np.ndarray
    x_nodes: list | None = None
    y_nodes: list | None = None

    def __post_init__(self):
        V = np.array(self.values, dtype=float)
        if V.ndim != 2 or V.size == 0:
            raise GridError(f"grid values must be a nonempty 2-D table, got shape {V.shape}")
        if not np.all(np.isfinite(V)):
            raise GridError("grid values must be finite")
        V.setflags(write=False)
        object.__setattr__(self, "values", V)
        for name, count in (("x_nodes", V.shape[0]), ("y_nodes", V.shape[1])):
            nodes = getattr(self, name)
            if nodes is not None:
                nodes = [as_vec(v, name=name) for v in nodes]
                if len(nodes) != count:
                    raise GridError(f"{name} has {len(nodes)} entries, table needs {count}")
                object.__setattr__(self, name, nodes)

    @classmethod
    def tabulate(cls, f, x_nodes, y_nodes):
        values = [[f(x, y) for y in y_nodes] for x in x_nodes]
        return cls(values, list(x_nodes), list(y_nodes))

    @classmethod
    def bilinear(cls, A, k=20):
        """Grid of ``x @ A @ y`` over uniform simplex grids with ``k`` points per edge."""
        A = np.asarray(A, dtype=float)
        X = simplex_grid(A.shape[0], k)
        Y = simplex_grid(A.shape[1], k)
        return cls(X @ A @ Y.T, list(X), list(Y))


@dataclass(frozen=True, eq=False)
class Witness:
    beta: np.ndarray
    alpha: float
    guarantee: float
    tol: float

    @property
    def valid(self):
        return self.guarantee <= self.alpha + self.tol


@dataclass(frozen=True, eq=False)
class Infeasible:
    """No column mix reaches ``alpha``.

    Either ``row`` indexes a row whose minimum is already at least ``alpha``,
    or ``row_mix`` is a mixture of rows guaranteeing ``lower_bound > alpha``
    against every column.
    """

    alpha: float
    row: int | None = None
    row_mix: np.ndarray | None = None
    lower_bound: float | None = None


def weak_duality_gap(g):
    """Return ``(maxmin, minmax, minmax - maxmin)`` over the pure grid."""
    if not isinstance(g, GridFunction):
        g = GridFunction(g)
    V = g.values
    maxmin = float(V.min(axis=1).max())
    minmax = float(V.max(axis=0).min())
    gap = minmax - maxmin
    assert gap >= -1e-12, "weak duality violated"
    return maxmin, minmax, gap


def minimax_gap_bilinear(game, config=None):
    """Certified duality gap of the mixed extension of a zero-sum game."""
    return solve_zero_sum(game, config=config).certificate.value


def extract_saddle(game, config=None):
    """Solve a zero-sum game and certify the point as a saddle point."""
    result = solve_zero_sum(game, config=config)
    tol = result.certificate.tol
    _, worst = check_saddle(game, result.z, tol)
    cert = Certificate(CertificateKind.SADDLE_CHECK, worst, tol,
                       result.certificate.iterations, result.certificate.method)
    return result.z, cert


def dual_witness(g, alpha, config=None):
    """Find column weights ``beta`` with ``max_i sum_j beta_j f(x_i, y_j) <= alpha``.

    Returns a :class:`Witness` or an :class:`Infeasible` answer with its
    evidence.  Raises ``NonConvergence`` when the underlying matrix game is
    not solved to ``config.tol``; an inconclusive search is never reported
    as infeasible.
    """
    if not isinstance(g, GridFunction):
        g = GridFunction(g)
    alpha = float(alpha)
    V = g.values
    row_min = V.min(axis=1)
    bad = np.flatnonzero(row_min >= alpha + ALPHA_TOL)
    if bad.size:
        return Infeasible(alpha, row=int(bad[0]))
    config = SolverConfig() if config is None else config
    # the matrix game on V - alpha has the same optimal strategies as on V
    result = solve_zero_sum(ZeroSumGame(V), config=config)
    p, beta = result.z
    guarantee = float((V @ beta).max())
    if guarantee <= alpha + config.tol:
        return Witness(np.array(beta), alpha, guarantee, config.tol)
    return Infeasible(alpha, row_mix=np.array(p), lower_bound=float((V.T @ p).min()))
