"""Shared numeric helpers: alpha quadrature, finite differences and
symmetric-matrix definiteness classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels

GRAD_STEP = 1e-6
HESS_STEP = 1e-4


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Simpson rule with K uniform intervals over [0, 1]."""

    K: int = 64

    def __post_init__(self):
        if self.K < 2 or self.K % 2 != 0:
            raise ValueError(f"K must be an even integer >= 2, got {self.K}")

    @property
    def alphas(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.K + 1)

    def integrate(self, samples) -> float:
        samples = np.asarray(samples, dtype=np.float64)
        if samples.shape != (self.K + 1,):
            raise ValueError(
                f"expected {self.K + 1} samples on the K={self.K} grid, "
                f"got {samples.shape[0]}"
            )
        return _kernels.simpson(samples, 1.0 / self.K)


def integrate_alpha(samples) -> float:
    """Integrate uniformly spaced samples of g(alpha) over [0, 1].

    Exact (up to rounding) for polynomials in alpha of degree <= 3, which
    covers every integrand arising from triangular coefficient cuts.
    """
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim != 1 or samples.shape[0] < 3:
        raise ValueError("need at least 3 samples (K >= 2)")
    k = samples.shape[0] - 1
    if k % 2 != 0:
        raise ValueError(f"Simpson rule needs an even interval count, got K={k}")
    return _kernels.simpson(samples, 1.0 / k)


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    NEGATIVE_DEFINITE = "negative_definite"
    POSITIVE_SEMIDEFINITE_SINGULAR = "positive_semidefinite_singular"
    NEGATIVE_SEMIDEFINITE_SINGULAR = "negative_semidefinite_singular"
    INDEFINITE = "indefinite"


def classify_definiteness(H) -> Definiteness:
    """Eigenvalue-sign verdict for a symmetric matrix.

    Tolerance tau = 1e-9 * (1 + ||H||) separates "zero" eigenvalues from
    signed ones; near-singular definite matrices land in the semidefinite
    verdicts rather than being forced into a min/max claim.
    """
    H = np.asarray(H, dtype=np.float64)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    if not np.allclose(H, H.T, rtol=0.0, atol=1e-10):
        raise ValueError("matrix is not symmetric within 1e-10")
    eigvals = np.linalg.eigvalsh(0.5 * (H + H.T))
    tau = 1e-9 * (1.0 + float(np.max(np.abs(eigvals), initial=0.0)))
    if np.all(eigvals > tau):
        return Definiteness.POSITIVE_DEFINITE
    if np.all(eigvals < -tau):
        return Definiteness.NEGATIVE_DEFINITE
    if np.all(eigvals >= -tau):
        return Definiteness.POSITIVE_SEMIDEFINITE_SINGULAR
    if np.all(eigvals <= tau):
        return Definiteness.NEGATIVE_SEMIDEFINITE_SINGULAR
    return Definiteness.INDEFINITE


def finite_diff_gradient(
    m: Callable[[np.ndarray], float], x, step: float = GRAD_STEP
) -> np.ndarray:
    """Central-difference gradient of a scalar function."""
    x = np.asarray(x, dtype=np.float64)
    grad = np.zeros(x.shape[0])
    for i in range(x.shape[0]):
        xp = x.copy()
        xm = x.copy()
        xp[i] += step
        xm[i] -= step
        grad[i] = (m(xp) - m(xm)) / (2.0 * step)
    return grad


def finite_diff_hessian(
    m: Callable[[np.ndarray], float], x, step: float = HESS_STEP
) -> np.ndarray:
    """Central-difference Hessian, symmetrized as (H + H.T) / 2."""
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[0]
    hess = np.zeros((n, n))
    f0 = m(x)
    for i in range(n):
        xp = x.copy()
        xm = x.copy()
        xp[i] += step
        xm[i] -= step
        hess[i, i] = (m(xp) - 2.0 * f0 + m(xm)) / step**2
        for j in range(i + 1, n):
            xpp = x.copy()
            xpm = x.copy()
            xmp = x.copy()
            xmm = x.copy()
            xpp[[i, j]] += step
            xmm[[i, j]] -= step
            xpm[i] += step
            xpm[j] -= step
            xmp[i] -= step
            xmp[j] += step
            hess[i, j] = hess[j, i] = (m(xpp) - m(xpm) - m(xmp) + m(xmm)) / (
                4.0 * step**2
            )
    return 0.5 * (hess + hess.T)
