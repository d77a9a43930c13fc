"""Projection fixed-point map, iterative equilibrium solvers and best responses.

A joint strategy ``(p, q)`` is a Nash equilibrium exactly when it is a fixed
point of

    phi(p, q) = (P(p + A q; first), P(q + B p; second)),

i.e. when each payoff gradient lies in the normal cone of its strategy set.
Existence of such a point does not make plain iteration of ``phi``
convergent, so two solvers are offered:

* :func:`solve_zero_sum` runs extragradient (optionally Krasnoselskii-Mann
  relaxed) on the monotone skew operator of a zero-sum game and stops on a
  certified duality gap.
* :func:`solve_bimatrix_heuristic` iterates ``z <- (1 - a) z + a phi(z)``.
  It is a heuristic: on matching pennies it cycles forever.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DimensionError, DomainError, NonConvergence
from .game import (
    BimatrixGame,
    Certificate,
    CertificateKind,
    JointStrategy,
    Method,
    ZeroSumGame,
    _default_sets,
    _check_dims,
    check_nash,
    payoff_u1,
    payoff_u2,
)
from .geometry import Simplex, as_vec

ITERATIVE_METHODS = (Method.EXTRAGRADIENT, Method.KRASNOSELSKII_MANN, Method.FIXED_POINT)
FACE_TOL = 1e-10


class Player(enum.Enum):
    ONE = 1
    TWO = 2


@dataclass(frozen=True)
class SolverConfig:
    method: Method = Method.EXTRAGRADIENT
    step: float | None = None
    averaging: float = 0.5
    max_iters: int = 100_000
    tol: float = 1e-6
    record_trace: bool = False
    start: JointStrategy | None = None

    def __post_init__(self):
        if isinstance(self.method, str):
            object.__setattr__(self, "method", Method(self.method))
        if self.method not in ITERATIVE_METHODS:
            raise ConfigError(f"{self.method.value} is not an iterative method")
        if self.step is not None and not self.step > 0:
            raise ConfigError(f"step must be positive, got {self.step}")
        if not 0 < self.averaging <= 1:
            raise ConfigError(f"averaging must lie in (0, 1], got {self.averaging}")
        if int(self.max_iters) != self.max_iters or self.max_iters < 1:
            raise ConfigError(f"max_iters must be a positive integer, got {self.max_iters}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")

    def step_for(self, *matrices):
        """Extragradient step for the given payoff matrices.

        Defaults to 0.9 / ||A||_F; an explicit step must satisfy
        step * L < 1 with L the largest spectral norm.
        """
        if self.step is None:
            fro = max(np.linalg.norm(M) for M in matrices)
            return 0.9 / fro if fro > 0 else 1.0
        lip = max(np.linalg.norm(M, 2) for M in matrices)
        if self.step * lip >= 1:
            raise ConfigError(f"step {self.step} violates step * L < 1 with L = {lip:.6g}")
        return float(self.step)


@dataclass(frozen=True)
class SolveResult:
    z: JointStrategy
    certificate: Certificate
    u1: float
    u2: float
    trace: list | None = field(default=None, repr=False)


def phi_map(game, sets, z):
    """One application of the projection map whose fixed points are the equilibria."""
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    _check_dims(game, z)
    sets = _default_sets(game, sets)
    p, q = z
    return JointStrategy(sets.first._project(p + game.A @ q), sets.second._project(q + game.B @ p))


def nash_residual(game, sets, z):
    """Euclidean distance between ``z`` and ``phi(z)``."""
    w = phi_map(game, sets, z)
    return float(np.linalg.norm(z.concat() - w.concat()))


def duality_gap(game, z, sets=None):
    """max_x f(x, q) - min_y f(p, y) for f(x, y) = x @ A @ y."""
    _check_dims(game, z)
    sets = _default_sets(game, sets)
    return _gap(game.A, z.p, z.q, sets.first, sets.second)[0]


def _gap(A, p, q, first, second):
    Aq = A @ q
    Atp = A.T @ p
    if type(first) is Simplex and type(second) is Simplex:
        return float(Aq.max() - Atp.min()), Aq, Atp
    hi, _ = first._support(Aq)
    neg_lo, _ = second._support(-Atp)
    return float(hi + neg_lo), Aq, Atp


def _start(game, sets, config, corner):
    if config.start is not None:
        z = config.start
        _check_dims(game, z)
        if not z.feasible(sets):
            raise ConfigError("start point is not feasible")
        return np.array(z.p), np.array(z.q)
    if corner:
        e1 = np.zeros(game.m)
        e2 = np.zeros(game.n)
        e1[0] = e2[0] = 1.0
        return sets.first._support(e1)[1], sets.second._support(e2)[1]
    return sets.first.barycenter(), sets.second.barycenter()


def _result(game, z, kind, value, tol, iterations, method, trace):
    cert = Certificate(kind, value, tol, iterations, method)
    return SolveResult(z, cert, payoff_u1(game, z), payoff_u2(game, z), trace)


def solve_zero_sum(game, sets=None, config=None):
    """Approximate a saddle point of ``p @ A @ q`` by projected extragradient.

    With ``Method.KRASNOSELSKII_MANN`` the extragradient step is relaxed:
    ``z <- (1 - a) z + a EG(z)``.  Iteration stops as soon as the duality gap
    at the current iterate is at most ``config.tol``.

    Raises :class:`NonConvergence` carrying the lowest-gap iterate when the
    budget runs out.
    """
    if not isinstance(game, ZeroSumGame):
        raise TypeError("solve_zero_sum needs a ZeroSumGame")
    config = SolverConfig() if config is None else config
    if config.method not in (Method.EXTRAGRADIENT, Method.KRASNOSELSKII_MANN):
        raise ConfigError(f"solve_zero_sum does not support {config.method.value}")
    sets = _default_sets(game, sets)
    if sets.first.dim != game.m or sets.second.dim != game.n:
        raise DimensionError("strategy sets do not match the game dimensions")
    A = game.A
    At = A.T
    tau = config.step_for(A)
    alpha = config.averaging if config.method is Method.KRASNOSELSKII_MANN else 1.0
    P1 = sets.first._project
    P2 = sets.second._project
    first, second = sets.first, sets.second

    p, q = _start(game, sets, config, corner=False)
    trace = [] if config.record_trace else None
    best = (np.inf, p, q, 0)
    bimatrix = game.to_bimatrix() if trace is not None else None
    for k in range(config.max_iters + 1):
        gap, Aq, Atp = _gap(A, p, q, first, second)
        if trace is not None:
            z = JointStrategy(p, q)
            trace.append((k, nash_residual(bimatrix, sets, z), gap))
        if gap < best[0]:
            best = (gap, p, q, k)
        if gap <= config.tol or k == config.max_iters:
            break
        ph = P1(p + tau * Aq)
        qh = P2(q - tau * Atp)
        pn = P1(p + tau * (A @ qh))
        qn = P2(q - tau * (At @ ph))
        if alpha == 1.0:
            p, q = pn, qn
        else:
            p = (1 - alpha) * p + alpha * pn
            q = (1 - alpha) * q + alpha * qn

    gap, p, q, k = best
    z = JointStrategy(p, q)
    result = _result(game, z, CertificateKind.DUALITY_GAP, duality_gap(game, z, sets),
                     config.tol, k, config.method, trace)
    if not result.certificate.accepted:
        raise NonConvergence(
            f"duality gap {gap:.3g} > {config.tol:g} after {config.max_iters} iterations", result
        )
    return result


def solve_bimatrix_heuristic(game, sets=None, config=None):
    """Iterate the projection map with relaxation ``z <- (1 - a) z + a phi(z)``.

    ``Method.FIXED_POINT`` uses ``a = 1``; ``Method.KRASNOSELSKII_MANN`` uses
    ``config.averaging``.  The default start is the first pure profile (the
    barycenter of a simplex is already the equilibrium of symmetric games
    such as matching pennies, which would hide the cycling).

    No convergence guarantee exists.  The lowest-residual iterate is returned,
    or attached to :class:`NonConvergence` if it misses ``config.tol``.
    """
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    if config is None:
        config = SolverConfig(method=Method.KRASNOSELSKII_MANN, tol=1e-8)
    if config.method not in (Method.FIXED_POINT, Method.KRASNOSELSKII_MANN):
        raise ConfigError(f"heuristic solver does not support {config.method.value}")
    sets = _default_sets(game, sets)
    if sets.first.dim != game.m or sets.second.dim != game.n:
        raise DimensionError("strategy sets do not match the game dimensions")
    alpha = 1.0 if config.method is Method.FIXED_POINT else config.averaging
    A, B = game.A, game.B
    P1 = sets.first._project
    P2 = sets.second._project

    p, q = _start(game, sets, config, corner=True)
    trace = [] if config.record_trace else None
    best = (np.inf, p, q, 0)
    for k in range(config.max_iters + 1):
        fp = P1(p + A @ q)
        fq = P2(q + B @ p)
        res = float(np.sqrt(np.sum((p - fp) ** 2) + np.sum((q - fq) ** 2)))
        if trace is not None:
            trace.append((k, res, check_nash(game, JointStrategy(p, q), sets=sets)[1]))
        if res < best[0]:
            best = (res, p, q, k)
        if res <= config.tol or k == config.max_iters:
            break
        if alpha == 1.0:
            p, q = fp, fq
        else:
            p = (1 - alpha) * p + alpha * fp
            q = (1 - alpha) * q + alpha * fq

    res, p, q, k = best
    z = JointStrategy(p, q)
    result = _result(game, z, CertificateKind.NASH_RESIDUAL, nash_residual(game, sets, z),
                     config.tol, k, config.method, trace)
    if not result.certificate.accepted:
        raise NonConvergence(
            f"best residual {res:.3g} > {config.tol:g} after {config.max_iters} iterations", result
        )
    return result


def best_response(game, sets, player, opponent_strategy):
    """Best-response value and face for one player against a fixed opponent.

    Returns ``(value, face)`` where ``face`` lists every pure strategy within
    1e-10 of the best payoff; the best-response set is the convex hull of
    those vertices.
    """
    if isinstance(game, ZeroSumGame):
        game = game.to_bimatrix()
    sets = _default_sets(game, sets)
    player = Player(player)
    if player is Player.ONE:
        own, M, other_dim = sets.first, game.A, game.n
    else:
        own, M, other_dim = sets.second, game.B, game.m
    if type(own) is not Simplex:
        raise DomainError("best_response needs a simplex strategy set")
    payoffs = M @ as_vec(opponent_strategy, other_dim, "opponent_strategy")
    value = float(payoffs.max())
    face = tuple(int(i) for i in np.flatnonzero(payoffs >= value - FACE_TOL))
    return value, face
