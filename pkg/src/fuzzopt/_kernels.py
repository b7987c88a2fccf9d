"""Hot numeric kernels: Simpson quadrature, polynomial evaluation and
levelwise alpha-cut accumulation.

Every kernel ships in two flavours: a pure-numpy implementation
(``*_numpy``) and a numba ``@njit`` build of a loop-style twin
(``*_numba``).  The module-level names (``simpson``, ``poly_value``, ...)
point at the active backend.  Set ``FUZZOPT_PURE_NUMPY=1`` to force the
numpy path; the numpy path is also the automatic fallback when numba is
not importable.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_PURE = os.environ.get("FUZZOPT_PURE_NUMPY", "").strip() not in ("", "0")
USE_NUMBA = HAVE_NUMBA and not _PURE
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# pure-numpy implementations


def simpson_numpy(y: np.ndarray, h: float) -> float:
    """Composite Simpson rule over uniformly spaced samples (even panel count)."""
    w = np.ones(y.shape[0])
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float(h / 3.0 * np.dot(w, y))


def poly_value_numpy(coeffs, exps, signs, x) -> float:
    mono = np.prod(x[None, :] ** exps, axis=1)
    return float(np.dot(coeffs * signs, mono))


def poly_gradient_numpy(coeffs, exps, signs, x) -> np.ndarray:
    n = exps.shape[1]
    pw = x[None, :] ** exps
    grad = np.zeros(n)
    for i in range(n):
        e = exps[:, i]
        dfac = e * x[i] ** np.maximum(e - 1, 0)
        rest = np.prod(np.delete(pw, i, axis=1), axis=1)
        grad[i] = np.dot(coeffs * signs, np.where(e > 0, dfac, 0.0) * rest)
    return grad


def poly_hessian_numpy(coeffs, exps, signs, x) -> np.ndarray:
    n = exps.shape[1]
    pw = x[None, :] ** exps
    hess = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            e_i = exps[:, i]
            e_j = exps[:, j]
            if i == j:
                fac = e_i * (e_i - 1) * x[i] ** np.maximum(e_i - 2, 0)
                fac = np.where(e_i > 1, fac, 0.0)
                rest = np.prod(np.delete(pw, i, axis=1), axis=1)
            else:
                fac = (
                    e_i * x[i] ** np.maximum(e_i - 1, 0)
                    * e_j * x[j] ** np.maximum(e_j - 1, 0)
                )
                fac = np.where((e_i > 0) & (e_j > 0), fac, 0.0)
                rest = np.prod(np.delete(pw, (i, j), axis=1), axis=1)
            hess[i, j] = hess[j, i] = np.dot(coeffs * signs, fac * rest)
    return hess


def accumulate_term_cuts_numpy(term_lo, term_hi, g):
    """Levelwise sum of [min(lo*g, hi*g), max(lo*g, hi*g)] over terms.

    ``term_lo``/``term_hi`` are (terms, levels) coefficient cuts with
    ``term_lo <= term_hi``; ``g`` holds the signed monomial values.
    """
    pos = (g >= 0.0)[:, None]
    scaled_lo = np.where(pos, term_lo, term_hi) * g[:, None]
    scaled_hi = np.where(pos, term_hi, term_lo) * g[:, None]
    return scaled_lo.sum(axis=0), scaled_hi.sum(axis=0)


def level_sum_grid_numpy(term_lo, term_hi, g) -> np.ndarray:
    """Levelwise (lower + upper) sum over terms: sum_t (lo_t + hi_t) * g_t."""
    return (term_lo + term_hi).T @ g


# ---------------------------------------------------------------------------
# loop-style twins, compiled with numba when available


def _simpson_loop(y, h):
    n = y.shape[0]
    acc = y[0] + y[n - 1]
    for i in range(1, n - 1):
        if i % 2 == 1:
            acc += 4.0 * y[i]
        else:
            acc += 2.0 * y[i]
    return h / 3.0 * acc


def _poly_value_loop(coeffs, exps, signs, x):
    total = 0.0
    for t in range(coeffs.shape[0]):
        mono = 1.0
        for d in range(x.shape[0]):
            mono *= x[d] ** exps[t, d]
        total += coeffs[t] * signs[t] * mono
    return total


def _poly_gradient_loop(coeffs, exps, signs, x):
    n = x.shape[0]
    grad = np.zeros(n)
    for t in range(coeffs.shape[0]):
        for i in range(n):
            e = exps[t, i]
            if e == 0:
                continue
            part = coeffs[t] * signs[t] * e * x[i] ** (e - 1)
            for d in range(n):
                if d != i:
                    part *= x[d] ** exps[t, d]
            grad[i] += part
    return grad


def _poly_hessian_loop(coeffs, exps, signs, x):
    n = x.shape[0]
    hess = np.zeros((n, n))
    for t in range(coeffs.shape[0]):
        for i in range(n):
            e_i = exps[t, i]
            for j in range(i, n):
                e_j = exps[t, j]
                if i == j:
                    if e_i < 2:
                        continue
                    part = coeffs[t] * signs[t] * e_i * (e_i - 1) * x[i] ** (e_i - 2)
                else:
                    if e_i == 0 or e_j == 0:
                        continue
                    part = (
                        coeffs[t] * signs[t]
                        * e_i * x[i] ** (e_i - 1)
                        * e_j * x[j] ** (e_j - 1)
                    )
                for d in range(n):
                    if d != i and d != j:
                        part *= x[d] ** exps[t, d]
                hess[i, j] += part
                if i != j:
                    hess[j, i] += part
    return hess


def _accumulate_term_cuts_loop(term_lo, term_hi, g):
    terms, levels = term_lo.shape
    lo = np.zeros(levels)
    hi = np.zeros(levels)
    for t in range(terms):
        if g[t] >= 0.0:
            for k in range(levels):
                lo[k] += term_lo[t, k] * g[t]
                hi[k] += term_hi[t, k] * g[t]
        else:
            for k in range(levels):
                lo[k] += term_hi[t, k] * g[t]
                hi[k] += term_lo[t, k] * g[t]
    return lo, hi


def _level_sum_grid_loop(term_lo, term_hi, g):
    terms, levels = term_lo.shape
    out = np.zeros(levels)
    for t in range(terms):
        for k in range(levels):
            out[k] += (term_lo[t, k] + term_hi[t, k]) * g[t]
    return out


if HAVE_NUMBA:
    simpson_numba = njit(cache=True)(_simpson_loop)
    poly_value_numba = njit(cache=True)(_poly_value_loop)
    poly_gradient_numba = njit(cache=True)(_poly_gradient_loop)
    poly_hessian_numba = njit(cache=True)(_poly_hessian_loop)
    accumulate_term_cuts_numba = njit(cache=True)(_accumulate_term_cuts_loop)
    level_sum_grid_numba = njit(cache=True)(_level_sum_grid_loop)
else:  # pragma: no cover
    simpson_numba = None
    poly_value_numba = None
    poly_gradient_numba = None
    poly_hessian_numba = None
    accumulate_term_cuts_numba = None
    level_sum_grid_numba = None

if USE_NUMBA:
    simpson = simpson_numba
    poly_value = poly_value_numba
    poly_gradient = poly_gradient_numba
    poly_hessian = poly_hessian_numba
    accumulate_term_cuts = accumulate_term_cuts_numba
    level_sum_grid = level_sum_grid_numba
else:
    simpson = simpson_numpy
    poly_value = poly_value_numpy
    poly_gradient = poly_gradient_numpy
    poly_hessian = poly_hessian_numpy
    accumulate_term_cuts = accumulate_term_cuts_numpy
    level_sum_grid = level_sum_grid_numpy
