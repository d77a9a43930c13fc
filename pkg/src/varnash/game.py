"""Two-player games with bilinear payoffs, joint strategies and certificates.

Payoff conventions: the row player picks ``p`` and receives ``p @ A @ q``;
the column player picks ``q`` and receives ``q @ B @ p``, so ``A`` is m x n
and ``B`` is n x m.  A zero-sum game with payoff matrix ``A`` is the bimatrix
game ``(A, -A.T)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, FeasibilityError
from .geometry import FEAS_TOL, ProductSet, as_vec

#: default tolerance for boolean equilibrium checks
CHECK_TOL = 1e-8


class CertificateKind(enum.Enum):
    NASH_RESIDUAL = "NashResidual"
    DUALITY_GAP = "DualityGap"
    SADDLE_CHECK = "SaddleCheck"


class Method(enum.Enum):
    EXTRAGRADIENT = "Extragradient"
    KRASNOSELSKII_MANN = "KrasnoselskiiMann"
    FIXED_POINT = "FixedPoint"
    SUPPORT_ENUMERATION = "SupportEnumeration"
    EXHAUSTIVE = "Exhaustive"


def _as_matrix(M, name):
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.size == 0:
        raise DimensionError(f"{name} must be a nonempty 2-D matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} has non-finite entries")
    M.setflags(write=False)
    return M


def _same_bits(X, Y):
    return X.shape == Y.shape and X.tobytes() == Y.tobytes()


@dataclass(frozen=True, eq=False)
class BimatrixGame:
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A = _as_matrix(self.A, "A")
        B = _as_matrix(self.B, "B")
        if B.shape != A.shape[::-1]:
            raise DimensionError(f"B must have shape {A.shape[::-1]}, got {B.shape}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def m(self):
        return self.A.shape[0]

    @property
    def n(self):
        return self.A.shape[1]

    def __eq__(self, other):
        if not isinstance(other, BimatrixGame):
            return NotImplemented
        return _same_bits(self.A, other.A) and _same_bits(self.B, other.B)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class ZeroSumGame:
    A: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", _as_matrix(self.A, "A"))

    @property
    def m(self):
        return self.A.shape[0]

    @property
    def n(self):
        return self.A.shape[1]

    def to_bimatrix(self):
        return BimatrixGame(self.A, -self.A.T)

    def __eq__(self, other):
        if not isinstance(other, ZeroSumGame):
            return NotImplemented
        return _same_bits(self.A, other.A)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class JointStrategy:
    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", as_vec(self.p, name="p"))
        object.__setattr__(self, "q", as_vec(self.q, name="q"))

    def feasible(self, sets, tol=FEAS_TOL):
        return sets.contains(self.p, self.q, tol)

    def concat(self):
        return np.concatenate([self.p, self.q])

    def __iter__(self):
        return iter((self.p, self.q))

    def __repr__(self):
        return f"JointStrategy(p={self.p.tolist()}, q={self.q.tolist()})"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    value: float
    tol: float
    iterations: int = 0
    method: Method = Method.EXHAUSTIVE

    def __post_init__(self):
        if not self.value >= 0:
            raise ValueError(f"certificate value must be nonnegative, got {self.value}")

    @property
    def accepted(self):
        return self.value <= self.tol


def _check_dims(game, z):
    if z.p.size != game.m or z.q.size != game.n:
        raise DimensionError(
            f"strategy dimensions ({z.p.size}, {z.q.size}) do not match game ({game.m}, {game.n})"
        )


def _bilinear(x, M, y):
    # fixed row-major accumulation keeps certificates bit-reproducible
    total = 0.0
    for xi, row in zip(x.tolist(), M.tolist()):
        acc = 0.0
        for mij, yj in zip(row, y.tolist()):
            acc += mij * yj
        total += xi * acc
    return total


def payoff_u1(game, z):
    """Row player payoff ``p @ A @ q``."""
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    _check_dims(game, z)
    return _bilinear(z.p, game.A, z.q)


def payoff_u2(game, z):
    """Column player payoff ``q @ B @ p``."""
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    _check_dims(game, z)
    return _bilinear(z.q, game.B, z.p)


def _default_sets(game, sets):
    return ProductSet.simplices(game.m, game.n) if sets is None else sets


def _require_feasible(z, sets):
    if not z.feasible(sets):
        raise FeasibilityError("joint strategy is not feasible")


def check_nash(game, z, tol=CHECK_TOL, sets=None):
    """Return ``(accepted, worst_violation)`` for the Nash inequalities at ``z``.

    Payoffs are linear in the deviating player's own strategy, so the best
    deviation is a maximizer of a linear functional over that player's set:
    a vertex of the simplex, a corner of the box, a boundary point of the ball.
    """
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    _check_dims(game, z)
    sets = _default_sets(game, sets)
    _require_feasible(z, sets)
    p, q = z
    best1, _ = sets.first._support(game.A @ q)
    best2, _ = sets.second._support(game.B @ p)
    worst = max(0.0, best1 - payoff_u1(game, z), best2 - payoff_u2(game, z))
    return worst <= tol, worst


def check_saddle(game, z, tol=CHECK_TOL, sets=None):
    """Return ``(accepted, worst_violation)`` for f(x, q) <= f(p, q) <= f(p, y)."""
    _check_dims(game, z)
    sets = _default_sets(game, sets)
    _require_feasible(z, sets)
    p, q = z
    f = _bilinear(p, game.A, q)
    best_x, _ = sets.first._support(game.A @ q)
    neg_min_y, _ = sets.second._support(-(game.A.T @ p))
    worst = max(0.0, best_x - f, f + neg_min_y)
    return worst <= tol, worst
