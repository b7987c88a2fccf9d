"""Critical points of fuzzy objectives: multi-start Newton on the
scalarized gradient, second-order classification, and an independent
quadrature oracle for the first-order integral condition."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import TriangularFuzzyNumber
from .functions import FuzzyPolynomial, evaluate, level_sum_samples, scalarize
from .numerics import GRAD_STEP, Definiteness, QuadratureSpec, classify_definiteness

DEFAULT_SEARCH_HALF_WIDTH = 100.0


class NoCriticalPointFound(RuntimeError):
    """No Newton start converged to a gradient zero."""


class Sense(enum.Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


class Classification(enum.Enum):
    STRICT_LOCAL_MIN = "strict_local_min"
    STRICT_LOCAL_MAX = "strict_local_max"
    SADDLE = "saddle"
    INDETERMINATE = "indeterminate"


_VERDICT_TO_CLASS = {
    Definiteness.POSITIVE_DEFINITE: Classification.STRICT_LOCAL_MIN,
    Definiteness.NEGATIVE_DEFINITE: Classification.STRICT_LOCAL_MAX,
    Definiteness.INDEFINITE: Classification.SADDLE,
    Definiteness.POSITIVE_SEMIDEFINITE_SINGULAR: Classification.INDETERMINATE,
    Definiteness.NEGATIVE_SEMIDEFINITE_SINGULAR: Classification.INDETERMINATE,
}


def _validate_box(box, dimension: int, label: str):
    box = tuple((float(lo), float(hi)) for lo, hi in box)
    if len(box) != dimension:
        raise ValueError(f"{label} must give one [lo, hi] pair per coordinate")
    for lo, hi in box:
        if not lo <= hi:
            raise ValueError(f"{label} has an empty interval [{lo}, {hi}]")
    return box


@dataclass(frozen=True)
class Problem:
    """Unconstrained fuzzy optimization problem over R^n."""

    objective: FuzzyPolynomial
    sense: Sense = Sense.MINIMIZE
    domain: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.domain is not None:
            object.__setattr__(
                self,
                "domain",
                _validate_box(self.domain, self.objective.dimension, "domain"),
            )

    def contains(self, x) -> bool:
        if self.domain is None:
            return True
        return all(
            lo - 1e-9 <= xi <= hi + 1e-9 for xi, (lo, hi) in zip(x, self.domain)
        )


@dataclass(frozen=True)
class SolverConfig:
    starts_per_axis: int = 9
    search_box: tuple[tuple[float, float], ...] | None = None
    newton_tol: float = 1e-10
    max_iters: int = 100
    dedupe_radius: float = 1e-6
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self):
        if self.starts_per_axis < 1:
            raise ValueError("starts_per_axis must be at least 1")
        if self.newton_tol <= 0 or self.max_iters < 1 or self.dedupe_radius <= 0:
            raise ValueError("tolerances and iteration counts must be positive")

    def box_for(self, p: Problem) -> tuple[tuple[float, float], ...]:
        """Start-seeding box: the problem domain when present, else the
        configured (or default) search box."""
        n = p.objective.dimension
        if p.domain is not None:
            return p.domain
        if self.search_box is not None:
            return _validate_box(self.search_box, n, "search_box")
        w = DEFAULT_SEARCH_HALF_WIDTH
        return tuple((-w, w) for _ in range(n))


@dataclass(frozen=True)
class CriticalPointReport:
    location: tuple[float, ...]
    classification: Classification
    rank_value: float
    fuzzy_value: TriangularFuzzyNumber
    gradient_residual: float
    oracle_residual: float


@dataclass(frozen=True)
class SolveReport:
    sense: Sense
    points: tuple[CriticalPointReport, ...]
    incumbent: CriticalPointReport | None
    message: str


def theorem_gradient_oracle(
    f: FuzzyPolynomial, x, quad: QuadratureSpec, step: float = GRAD_STEP
) -> np.ndarray:
    """Integral of alpha * grad(f_a^L + f_a^U)(x) d(alpha), by Simpson
    quadrature of central finite differences of the level sums.

    Deliberately avoids the rank scalarization so it can cross-check it.
    """
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    alphas = quad.alphas
    out = np.zeros(x.shape[0])
    for i in range(x.shape[0]):
        xp = x.copy()
        xm = x.copy()
        xp[i] += step
        xm[i] -= step
        fd = (level_sum_samples(f, xp, quad.K) - level_sum_samples(f, xm, quad.K)) / (
            2.0 * step
        )
        out[i] = quad.integrate(alphas * fd)
    return out


def verify_necessary(p: Problem, x, cfg: SolverConfig | None = None) -> float:
    """Residual norm of the first-order integral condition at ``x``."""
    cfg = cfg or SolverConfig()
    return float(
        np.linalg.norm(theorem_gradient_oracle(p.objective, x, cfg.quadrature))
    )


def classify(p: Problem, x, cfg: SolverConfig | None = None) -> CriticalPointReport:
    """Second-order report at ``x``; never consults the problem sense."""
    cfg = cfg or SolverConfig()
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if not p.contains(x):
        raise ValueError(f"point {x.tolist()} lies outside the problem domain")
    m = scalarize(p.objective)
    verdict = classify_definiteness(m.hessian_value(x))
    return CriticalPointReport(
        location=tuple(float(v) for v in x),
        classification=_VERDICT_TO_CLASS[verdict],
        rank_value=m.value(x),
        fuzzy_value=evaluate(p.objective, x),
        gradient_residual=float(np.linalg.norm(m.gradient_value(x))),
        oracle_residual=verify_necessary(p, x, cfg),
    )


def _newton_from(m, x0: np.ndarray, tol: float, max_iters: int):
    """Damped Newton on grad(m) = 0; gradient step when the Hessian is singular."""
    x = x0.copy()
    g = m.gradient_value(x)
    gn = float(np.linalg.norm(g))
    for _ in range(max_iters):
        if gn <= tol:
            return x, gn, True
        H = m.hessian_value(x)
        try:
            d = np.linalg.solve(H, -g)
            if not np.all(np.isfinite(d)):
                raise np.linalg.LinAlgError
        except np.linalg.LinAlgError:
            scale = 1.0 + float(np.max(np.abs(H)))
            d = -g / scale
        t = 1.0
        for _ in range(60):
            x_new = x + t * d
            g_new = m.gradient_value(x_new)
            gn_new = float(np.linalg.norm(g_new))
            if np.isfinite(gn_new) and gn_new < gn:
                break
            t *= 0.5
        else:
            return x, gn, gn <= tol
        x, g, gn = x_new, g_new, gn_new
    return x, gn, gn <= tol


def _start_grid(box, starts_per_axis: int) -> np.ndarray:
    axes = []
    for lo, hi in box:
        if starts_per_axis == 1:
            axes.append(np.array([(lo + hi) / 2.0]))
        else:
            axes.append(np.linspace(lo, hi, starts_per_axis))
    return np.array(list(itertools.product(*axes)))


def find_critical_points(
    p: Problem, cfg: SolverConfig | None = None
) -> list[CriticalPointReport]:
    """All deduplicated Newton roots of grad(m), classified and verified,
    sorted by rank value then location."""
    cfg = cfg or SolverConfig()
    m = scalarize(p.objective)
    starts = _start_grid(cfg.box_for(p), cfg.starts_per_axis)

    converged: list[tuple[np.ndarray, float]] = []
    for x0 in starts:
        x, gn, ok = _newton_from(m, x0, cfg.newton_tol, cfg.max_iters)
        if ok and p.contains(x):
            converged.append((x, gn))

    # greedy dedupe in the infinity norm, keeping the smallest residual
    reps: list[tuple[np.ndarray, float]] = []
    for x, gn in converged:
        for idx, (rx, rgn) in enumerate(reps):
            if np.max(np.abs(x - rx)) <= cfg.dedupe_radius:
                if gn < rgn:
                    reps[idx] = (x, gn)
                break
        else:
            reps.append((x, gn))

    if not reps:
        raise NoCriticalPointFound(
            f"no Newton start converged within {cfg.max_iters} iterations "
            f"(tolerance {cfg.newton_tol:g})"
        )

    reports = [classify(p, x, cfg) for x, _ in reps]
    reports.sort(key=lambda r: (r.rank_value, r.location))
    return reports


def solve(p: Problem, cfg: SolverConfig | None = None) -> SolveReport:
    """Critical points plus the best classified local optimum for the sense.

    The incumbent is the best found *local* optimum; no global claim is
    made.
    """
    cfg = cfg or SolverConfig()
    reports = find_critical_points(p, cfg)
    if p.sense is Sense.MINIMIZE:
        wanted = Classification.STRICT_LOCAL_MIN
        candidates = [r for r in reports if r.classification is wanted]
        incumbent = min(candidates, key=lambda r: r.rank_value, default=None)
    else:
        wanted = Classification.STRICT_LOCAL_MAX
        candidates = [r for r in reports if r.classification is wanted]
        incumbent = max(candidates, key=lambda r: r.rank_value, default=None)
    if incumbent is None:
        message = (
            f"found {len(reports)} critical point(s) but none classifies as "
            f"{wanted.value}; no incumbent for sense {p.sense.value}"
        )
    else:
        loc = "(" + ", ".join(f"{v:.6g}" for v in incumbent.location) + ")"
        message = (
            f"incumbent {wanted.value} at {loc} "
            f"with rank value {incumbent.rank_value:.6g}"
        )
    return SolveReport(
        sense=p.sense, points=tuple(reports), incumbent=incumbent, message=message
    )
