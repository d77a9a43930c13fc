"""Exact equilibrium computation for small games.

Support enumeration: for every pair of equal-size supports, solve the
indifference equations that make the opponent's mixture equalize payoffs on
the support, then keep the solutions that are nonnegative and admit no
profitable off-support deviation.  The result is complete for nondegenerate
games; supports whose indifference system is singular are skipped and
reported.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import DimensionError, SizeError
from .game import (
    JointStrategy,
    ZeroSumGame,
    payoff_u1,
    payoff_u2,
)
from .geometry import simplex_grid

MAX_DIM = 8
ORACLE_TOL = 1e-9
PIVOT_TOL = 1e-10


@dataclass(frozen=True, order=True)
class SupportPair:
    rows: tuple
    cols: tuple

    def __post_init__(self):
        for name in ("rows", "cols"):
            idx = tuple(int(i) for i in getattr(self, name))
            if not idx or any(a >= b for a, b in zip(idx, idx[1:])) or idx[0] < 0:
                raise ValueError(f"{name} must be a nonempty strictly increasing index tuple")
            object.__setattr__(self, name, idx)


class Equilibrium(NamedTuple):
    z: JointStrategy
    u1: float
    u2: float
    support: SupportPair


@dataclass(frozen=True)
class EquilibriumList:
    entries: list
    degenerate_skips: list = field(default_factory=list)
    game: object = field(default=None, repr=False)

    @property
    def degenerate(self):
        return bool(self.degenerate_skips)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def _indifferent_mix(M):
    """Solve M x = u 1, sum(x) = 1 for (x, u); None if the system is singular.

    ``M`` is the payoff block (own support x opponent support) that the
    mixture ``x`` must make the owner indifferent over.
    """
    k = M.shape[0]
    K = np.zeros((k + 1, k + 1))
    K[:k, :k] = M
    K[:k, k] = -1.0
    K[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    with warnings.catch_warnings():
        # singular supports are expected and handled through the pivot test
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(K, check_finite=False)
    if np.min(np.abs(np.diag(lu))) < PIVOT_TOL:
        return None
    sol = scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)
    return sol[:k], sol[k]


def enumerate_equilibria(game, max_dim=MAX_DIM):
    """All equilibria of a nondegenerate bimatrix game, by support enumeration."""
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    m, n = game.m, game.n
    if m > max_dim or n > max_dim:
        raise SizeError(f"game is {m}x{n}; support enumeration is capped at {max_dim}")
    A, B = game.A, game.B
    entries = []
    skipped = []
    for k in range(1, min(m, n) + 1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                # q makes the row player indifferent over `rows`, p likewise for `cols`
                sq = _indifferent_mix(A[np.ix_(rows, cols)])
                sp = _indifferent_mix(B[np.ix_(cols, rows)])
                if sq is None or sp is None:
                    skipped.append(SupportPair(rows, cols))
                    continue
                (q_s, v1), (p_s, v2) = sq, sp
                if q_s.min() < -ORACLE_TOL or p_s.min() < -ORACLE_TOL:
                    continue
                p = np.zeros(m)
                q = np.zeros(n)
                p[list(rows)] = np.maximum(p_s, 0.0)
                q[list(cols)] = np.maximum(q_s, 0.0)
                p /= p.sum()
                q /= q.sum()
                if (A @ q).max() > v1 + ORACLE_TOL or (B @ p).max() > v2 + ORACLE_TOL:
                    continue
                z = JointStrategy(p, q)
                entries.append(Equilibrium(z, payoff_u1(game, z), payoff_u2(game, z),
                                           SupportPair(rows, cols)))
    entries.sort(key=lambda e: e.support)
    return EquilibriumList(entries, skipped, game)


def zero_sum_value(game, max_dim=MAX_DIM):
    """Value of a zero-sum game, checked for agreement across all enumerated equilibria."""
    if not isinstance(game, ZeroSumGame):
        raise TypeError("zero_sum_value needs a ZeroSumGame")
    eqs = enumerate_equilibria(game, max_dim)
    if not eqs.entries:
        raise ValueError("support enumeration found no equilibrium (degenerate game)")
    values = [e.u1 for e in eqs]
    if max(values) - min(values) > ORACLE_TOL:
        raise AssertionError(f"equilibria disagree on the game value: {values}")
    return values[0]


def grid_nash_check(game, z, grid_points=50):
    """Worst deviation gain over a uniform simplex grid (vertices included).

    Brute-force counterpart of :func:`check_nash`, which only tests vertices.
    """
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    if game.m > 4 or game.n > 4:
        raise SizeError("grid_nash_check is limited to games of size at most 4x4")
    if z.p.size != game.m or z.q.size != game.n:
        raise DimensionError("strategy dimensions do not match the game")
    u1 = payoff_u1(game, z)
    u2 = payoff_u2(game, z)
    gain1 = (simplex_grid(game.m, grid_points) @ (game.A @ z.q)).max() - u1
    gain2 = (simplex_grid(game.n, grid_points) @ (game.B @ z.p)).max() - u2
    return max(0.0, float(gain1), float(gain2))

