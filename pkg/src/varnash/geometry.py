"""Euclidean projections, distances and normal-cone tests on compact convex sets.

Three set kinds are supported: the probability simplex, an axis-aligned box and
a closed Euclidean ball.  Each exposes its nearest-point projection, a
membership test and its support function (maximum of a linear functional over
the set), which is all the equilibrium code needs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, FeasibilityError

#: membership tolerance for points produced by projections
FEAS_TOL = 1e-12


def as_vec(x, dim=None, name="x"):
    """Return ``x`` as a read-only 1-D float64 array, validating shape and finiteness."""
    v = np.array(x, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionError(f"{name} must be a nonempty 1-D vector, got shape {v.shape}")
    if dim is not None and v.size != dim:
        raise DimensionError(f"{name} has dimension {v.size}, expected {dim}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has non-finite entries")
    v.setflags(write=False)
    return v


class ConvexSet:
    """Nonempty compact convex subset of R^dim."""

    dim: int

    def _project(self, x):
        raise DomainError(f"projection not available for {type(self).__name__}")

    def _support(self, c):
        raise DomainError(f"support function not available for {type(self).__name__}")

    def _contains(self, x, tol):
        raise DomainError(f"membership not available for {type(self).__name__}")

    def project(self, x):
        return self._project(as_vec(x, self.dim))

    def contains(self, x, tol=FEAS_TOL):
        return self._contains(as_vec(x, self.dim), tol)

    def support(self, c):
        """Return ``(max <c, w> over the set, a maximizer w)``."""
        return self._support(as_vec(c, self.dim, "c"))

    def barycenter(self):
        raise NotImplementedError

    def random_point(self, rng):
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class Simplex(ConvexSet):
    """Probability simplex {x >= 0, sum(x) = 1}."""

    dim: int

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise DimensionError(f"simplex dimension must be a positive integer, got {self.dim}")

    def _project(self, x):
        # sort-and-threshold: tau = (prefix_sum - 1) / k for the largest valid k
        u = x[np.argsort(-x, kind="stable")]
        css = np.cumsum(u) - 1.0
        k = np.arange(1, x.size + 1)
        rho = np.flatnonzero(u - css / k > 0)[-1]
        tau = css[rho] / (rho + 1)
        return np.maximum(x - tau, 0.0)

    def _contains(self, x, tol):
        return bool(x.min() >= -tol and abs(x.sum() - 1.0) <= tol)

    def _support(self, c):
        i = int(np.argmax(c))
        w = np.zeros(self.dim)
        w[i] = 1.0
        return float(c[i]), w

    def vertices(self):
        return np.eye(self.dim)

    def barycenter(self):
        return np.full(self.dim, 1.0 / self.dim)

    def random_point(self, rng):
        return rng.dirichlet(np.ones(self.dim))


@dataclass(frozen=True, eq=False)
class Box(ConvexSet):
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = as_vec(self.lower, name="lower")
        hi = as_vec(self.upper, lo.size, name="upper")
        if np.any(lo > hi):
            raise ValueError("box requires lower <= upper componentwise")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dim(self):
        return self.lower.size

    def _project(self, x):
        return np.clip(x, self.lower, self.upper)

    def _contains(self, x, tol):
        return bool(np.all(x >= self.lower - tol) and np.all(x <= self.upper + tol))

    def _support(self, c):
        w = np.where(c > 0, self.upper, self.lower)
        return float(c @ w), w

    def barycenter(self):
        return 0.5 * (self.lower + self.upper)

    def random_point(self, rng):
        return rng.uniform(self.lower, self.upper)


@dataclass(frozen=True, eq=False)
class Ball(ConvexSet):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_vec(self.center, name="center"))
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"ball radius must be positive, got {self.radius}")
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self):
        return self.center.size

    def _project(self, x):
        d = x - self.center
        norm = np.linalg.norm(d)
        if norm <= self.radius:
            return x.copy()
        return self.center + d * (self.radius / norm)

    def _contains(self, x, tol):
        return bool(np.linalg.norm(x - self.center) <= self.radius + tol)

    def _support(self, c):
        norm = np.linalg.norm(c)
        if norm == 0.0:
            return float(c @ self.center), self.center.copy()
        w = self.center + c * (self.radius / norm)
        return float(c @ self.center + self.radius * norm), w

    def barycenter(self):
        return self.center.copy()

    def random_point(self, rng):
        d = rng.standard_normal(self.dim)
        d /= np.linalg.norm(d)
        return self.center + d * self.radius * rng.uniform() ** (1.0 / self.dim)


@dataclass(frozen=True)
class ProductSet:
    """Cartesian product of two strategy sets; projection acts blockwise."""

    first: ConvexSet
    second: ConvexSet

    @classmethod
    def simplices(cls, m, n):
        return cls(Simplex(m), Simplex(n))

    def project(self, x, y):
        return self.first.project(x), self.second.project(y)

    def contains(self, x, y, tol=FEAS_TOL):
        return self.first.contains(x, tol) and self.second.contains(y, tol)


def project(set, x):
    """Nearest point of ``set`` to ``x``."""
    return set.project(x)


def distance(set, x):
    x = as_vec(x, set.dim)
    return float(np.linalg.norm(x - set._project(x)))


def variational_check(set, x, w, tol=1e-12):
    """Test whether ``w`` satisfies the projection inequality for ``x``.

    The inequality <x - w, omega - w> <= 0 is linear in omega, so its maximum
    over the set is attained at a vertex (simplex, box) or at the boundary
    point along x - w (ball).  The support function evaluates exactly that
    maximum.
    """
    x = as_vec(x, set.dim)
    w = as_vec(w, set.dim, "w")
    if not set._contains(w, max(tol, FEAS_TOL)):
        return False
    d = x - w
    top, _ = set._support(d)
    return bool(top - d @ w <= tol)


def normal_cone_check(set, xbar, v, tol=1e-10):
    """``v`` is normal to ``set`` at ``xbar`` iff ``xbar`` is the projection of ``xbar + v``."""
    xbar = as_vec(xbar, set.dim, "xbar")
    v = as_vec(v, set.dim, "v")
    if not set._contains(xbar, FEAS_TOL):
        raise FeasibilityError("xbar is not in the set")
    return bool(np.linalg.norm(xbar - set._project(xbar + v)) <= tol)


def check_stationarity(grad, set, xbar, tol=1e-10):
    """Optimality test for minimizing a convex function with gradient ``grad`` at ``xbar``.

    Maximization callers pass the negated gradient.
    """
    grad = as_vec(grad, set.dim, "grad")
    return normal_cone_check(set, xbar, -grad, tol)


def simplex_grid(dim, k=20):
    """Uniform grid on the ``dim``-simplex with ``k`` points per edge, vertices included."""
    if dim < 1 or k < 2:
        raise ValueError("simplex_grid needs dim >= 1 and k >= 2")
    steps = k - 1
    points = []
    # stars and bars: bar positions split `steps` units into `dim` parts
    for bars in itertools.combinations(range(steps + dim - 1), dim - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(steps + dim - 2 - prev)
        points.append(parts)
    return np.array(points, dtype=float) / steps
