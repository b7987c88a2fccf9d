"""Fuzzy-number types, alpha-cut arithmetic, gH-difference, metric and the
rank-based linear order.

Triangular numbers are the only directly constructible membership shape;
everything else lives on a uniform alpha grid (``AlphaGridFuzzyNumber``),
which is closed under the arithmetic here including the gH-difference.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels

#: Default number of alpha intervals for discretized numbers (even, so the
#: composite Simpson rank quadrature applies directly).
DEFAULT_K = 64

#: Nestedness violations at or below this size are treated as rounding
#: jitter and snapped to the monotone envelope; anything larger means the
#: cuts do not describe a fuzzy number.
NESTED_TOL = 1e-12

#: Two ranks within this absolute tolerance are considered equivalent.
RANK_TOL = 1e-12


class NotAFuzzyNumber(ValueError):
    """Candidate alpha-cuts are not nested, so no fuzzy number exists."""


class GridMismatchError(ValueError):
    """Operands live on different alpha grids."""


class Ordering(enum.Enum):
    PRECEDES = "precedes"
    EQUIVALENT = "equivalent"
    SUCCEEDS = "succeeds"


@dataclass(frozen=True)
class Interval:
    """Closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"interval requires lo <= hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Triangular fuzzy number (left, peak, right) with linear sides.

    Degenerate sides (left == peak or peak == right) are legal; the
    membership grade at the degenerate point is 1.
    """

    left: float
    peak: float
    right: float

    def __post_init__(self):
        if not self.left <= self.peak <= self.right:
            raise ValueError(
                f"triangular number requires left <= peak <= right, "
                f"got ({self.left}, {self.peak}, {self.right})"
            )

    @classmethod
    def crisp(cls, value: float) -> "TriangularFuzzyNumber":
        return cls(value, value, value)

    @property
    def is_crisp(self) -> bool:
        return self.left == self.peak == self.right

    def membership(self, r: float) -> float:
        """Piecewise-linear membership grade of ``r``, in [0, 1]."""
        if r < self.left or r > self.right:
            return 0.0
        if r == self.peak:
            return 1.0
        if r < self.peak:
            return (r - self.left) / (self.peak - self.left)
        return (self.right - r) / (self.right - self.peak)

    def alpha_cut(self, alpha: float) -> Interval:
        """Alpha-level set [(1-a)*left + a*peak, (1-a)*right + a*peak]."""
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
        return Interval(
            (1.0 - alpha) * self.left + alpha * self.peak,
            (1.0 - alpha) * self.right + alpha * self.peak,
        )

    def as_triple(self) -> tuple[float, float, float]:
        return (self.left, self.peak, self.right)


class AlphaGridFuzzyNumber:
    """Fuzzy number given by nested interval cuts on a uniform alpha grid.

    ``lo`` must be nondecreasing and ``hi`` nonincreasing in alpha, with
    ``lo <= hi`` at every level.  Violations up to ``NESTED_TOL`` are
    repaired to the monotone envelope; larger ones raise.
    """

    __slots__ = ("alphas", "lo", "hi")

    def __init__(self, alphas, lo, hi):
        alphas = np.array(alphas, dtype=np.float64)
        lo = np.array(lo, dtype=np.float64)
        hi = np.array(hi, dtype=np.float64)
        if alphas.ndim != 1 or alphas.shape != lo.shape or alphas.shape != hi.shape:
            raise ValueError("alphas, lo and hi must be 1-d arrays of equal length")
        if alphas.shape[0] < 2:
            raise ValueError("grid needs at least the two endpoint levels")
        k = alphas.shape[0] - 1
        expected = np.linspace(0.0, 1.0, k + 1)
        if not np.allclose(alphas, expected, rtol=0.0, atol=1e-12):
            raise ValueError("alphas must form a uniform grid from 0 to 1")

        violation = max(
            float(np.max(np.diff(lo) * -1.0, initial=0.0)),
            float(np.max(np.diff(hi), initial=0.0)),
            float(np.max(lo - hi, initial=0.0)),
        )
        if violation > NESTED_TOL:
            raise NotAFuzzyNumber(
                f"alpha-cuts are not nested (violation {violation:.3e})"
            )
        if violation > 0.0:
            lo = np.maximum.accumulate(lo)
            hi = np.minimum.accumulate(hi)
            mid = 0.5 * (lo + hi)
            crossed = lo > hi
            lo[crossed] = mid[crossed]
            hi[crossed] = mid[crossed]

        for arr in (alphas, lo, hi):
            arr.flags.writeable = False
        self.alphas = alphas
        self.lo = lo
        self.hi = hi

    @property
    def K(self) -> int:
        return self.alphas.shape[0] - 1

    @property
    def levels(self) -> list[tuple[float, Interval]]:
        return [
            (float(a), Interval(float(l), float(h)))
            for a, l, h in zip(self.alphas, self.lo, self.hi)
        ]

    def cut_at(self, index: int) -> Interval:
        return Interval(float(self.lo[index]), float(self.hi[index]))

    @property
    def support(self) -> Interval:
        return self.cut_at(0)

    @property
    def core(self) -> Interval:
        return self.cut_at(-1)

    def magnitude(self) -> float:
        """Largest absolute endpoint, i.e. distance to the crisp zero."""
        return float(max(np.max(np.abs(self.lo)), np.max(np.abs(self.hi))))

    def __repr__(self):
        return (
            f"AlphaGridFuzzyNumber(K={self.K}, support=[{self.lo[0]:.6g}, "
            f"{self.hi[0]:.6g}], core=[{self.lo[-1]:.6g}, {self.hi[-1]:.6g}])"
        )


@dataclass(frozen=True, order=True)
class Rank:
    """Value of the ranking functional: integral of alpha*(lo+hi) over [0,1]."""

    value: float

    def __float__(self) -> float:
        return self.value


def discretize(a: TriangularFuzzyNumber, K: int = DEFAULT_K) -> AlphaGridFuzzyNumber:
    """Sample the alpha-cuts of a triangular number on the uniform {k/K} grid."""
    if K < 2:
        raise ValueError(f"K must be at least 2, got {K}")
    alphas = np.linspace(0.0, 1.0, K + 1)
    lo = (1.0 - alphas) * a.left + alphas * a.peak
    hi = (1.0 - alphas) * a.right + alphas * a.peak
    return AlphaGridFuzzyNumber(alphas, lo, hi)


def _require_same_grid(a: AlphaGridFuzzyNumber, b: AlphaGridFuzzyNumber):
    if a.K != b.K:
        raise GridMismatchError(f"alpha grids differ: K={a.K} vs K={b.K}")


def add(a: AlphaGridFuzzyNumber, b: AlphaGridFuzzyNumber) -> AlphaGridFuzzyNumber:
    """Levelwise interval addition."""
    _require_same_grid(a, b)
    return AlphaGridFuzzyNumber(a.alphas, a.lo + b.lo, a.hi + b.hi)


def scalar_mul(lam: float, a: AlphaGridFuzzyNumber) -> AlphaGridFuzzyNumber:
    """Levelwise scalar multiple; a negative scalar swaps the endpoints."""
    if lam >= 0.0:
        return AlphaGridFuzzyNumber(a.alphas, lam * a.lo, lam * a.hi)
    return AlphaGridFuzzyNumber(a.alphas, lam * a.hi, lam * a.lo)


def gh_difference(
    a: AlphaGridFuzzyNumber, b: AlphaGridFuzzyNumber
) -> AlphaGridFuzzyNumber:
    """Generalized Hukuhara difference a -gH b.

    Levelwise candidate [min(loA-loB, hiA-hiB), max(loA-loB, hiA-hiB)];
    exists only when those cuts are nested, otherwise raises
    ``NotAFuzzyNumber``.  At every level the result satisfies one of the
    reconstruction identities b + c = a or b = a - c.
    """
    _require_same_grid(a, b)
    diff_lo = a.lo - b.lo
    diff_hi = a.hi - b.hi
    return AlphaGridFuzzyNumber(
        a.alphas, np.minimum(diff_lo, diff_hi), np.maximum(diff_lo, diff_hi)
    )


def distance(a: AlphaGridFuzzyNumber, b: AlphaGridFuzzyNumber) -> float:
    """Supremum-over-levels Hausdorff distance between interval cuts."""
    _require_same_grid(a, b)
    return float(
        max(np.max(np.abs(a.lo - b.lo)), np.max(np.abs(a.hi - b.hi)))
    )


def rank(a: TriangularFuzzyNumber | AlphaGridFuzzyNumber) -> Rank:
    """Ranking functional inducing the linear order on fuzzy numbers.

    Closed form (left + 4*peak + right)/6 for triangular numbers; composite
    Simpson quadrature of alpha*(lo+hi) for grid numbers (K must be even).
    """
    if isinstance(a, TriangularFuzzyNumber):
        return Rank((a.left + 4.0 * a.peak + a.right) / 6.0)
    if a.K % 2 != 0:
        raise ValueError(f"Simpson rank quadrature needs an even K, got {a.K}")
    integrand = a.alphas * (a.lo + a.hi)
    return Rank(_kernels.simpson(integrand, 1.0 / a.K))


def compare(
    a: TriangularFuzzyNumber | AlphaGridFuzzyNumber,
    b: TriangularFuzzyNumber | AlphaGridFuzzyNumber,
    tol: float = RANK_TOL,
) -> Ordering:
    """Total order verdict from the ranking functional."""
    ra = rank(a).value
    rb = rank(b).value
    if ra < rb - tol:
        return Ordering.PRECEDES
    if ra > rb + tol:
        return Ordering.SUCCEEDS
    return Ordering.EQUIVALENT
