"""Fuzzy-valued polynomial functions over R^n.

An objective is a sum of terms: triangular coefficient times a signed real
monomial.  Levelwise evaluation sign-splits each term, so cut endpoints
stay piecewise linear in alpha and the value at any point is again
triangular.  The rank scalarization turns the fuzzy objective into the
crisp polynomial whose calculus drives the optimality conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .core import (
    DEFAULT_K,
    AlphaGridFuzzyNumber,
    NotAFuzzyNumber,
    TriangularFuzzyNumber,
    distance,
    gh_difference,
    rank,
    scalar_mul,
)

#: Decreasing steps for the gH difference-quotient ladder.
H_LADDER = (1e-2, 1e-3, 1e-4, 1e-5)

#: Relative agreement tolerance for the two-sided limit check.
DERIV_TOL = 1e-4


class NoGHDerivative(ValueError):
    """The numeric gH difference quotient does not settle to a fuzzy number."""

    def __init__(self, message: str, coordinate: int | None = None):
        super().__init__(message)
        self.coordinate = coordinate


@dataclass(frozen=True)
class Monomial:
    """Product of coordinate powers, x1^e1 * ... * xn^en."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"exponents must be nonnegative, got {self.exponents}")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def value(self, x) -> float:
        out = 1.0
        for xi, e in zip(x, self.exponents):
            out *= float(xi) ** e
        return out


@dataclass(frozen=True)
class FuzzyTerm:
    """Triangular coefficient times a signed monomial."""

    coefficient: TriangularFuzzyNumber
    monomial: Monomial
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def monomial_value(self, x) -> float:
        return self.sign * self.monomial.value(x)


@dataclass(frozen=True)
class FuzzyPolynomial:
    """Fuzzy-valued objective: levelwise sum of coefficient-times-monomial terms."""

    dimension: int
    terms: tuple[FuzzyTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if not self.terms:
            raise ValueError("a fuzzy polynomial needs at least one term")
        for idx, term in enumerate(self.terms):
            if term.monomial.dimension != self.dimension:
                raise ValueError(
                    f"term {idx} has a monomial of dimension "
                    f"{term.monomial.dimension}, expected {self.dimension}"
                )

    @cached_property
    def _packed(self):
        """(c_left, c_peak, c_right, exps, signs) arrays for the kernels."""
        cl = np.array([t.coefficient.left for t in self.terms])
        cp = np.array([t.coefficient.peak for t in self.terms])
        cu = np.array([t.coefficient.right for t in self.terms])
        exps = np.array([t.monomial.exponents for t in self.terms], dtype=np.int64)
        signs = np.array([float(t.sign) for t in self.terms])
        return cl, cp, cu, exps, signs

    def _monomial_values(self, x: np.ndarray) -> np.ndarray:
        _, _, _, exps, signs = self._packed
        return signs * np.prod(x[None, :] ** exps, axis=1)

    def _coefficient_cut_grids(self, K: int):
        """Coefficient alpha-cuts sampled on the {k/K} grid, shape (terms, K+1)."""
        cl, cp, cu, _, _ = self._packed
        alphas = np.linspace(0.0, 1.0, K + 1)
        w = 1.0 - alphas
        return (
            w[None, :] * cl[:, None] + alphas[None, :] * cp[:, None],
            w[None, :] * cu[:, None] + alphas[None, :] * cp[:, None],
        )


def _check_point(f: FuzzyPolynomial, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.shape[0] != f.dimension:
        raise ValueError(
            f"point has dimension {x.shape[0]}, objective expects {f.dimension}"
        )
    return x


def evaluate(f: FuzzyPolynomial, x) -> TriangularFuzzyNumber:
    """Objective value at ``x``, exact in closed triangular form."""
    x = _check_point(f, x)
    cl, cp, cu, _, _ = f._packed
    g = f._monomial_values(x)
    lo = np.where(g >= 0.0, cl, cu) * g
    hi = np.where(g >= 0.0, cu, cl) * g
    return TriangularFuzzyNumber(float(lo.sum()), float(np.dot(cp, g)), float(hi.sum()))


def evaluate_on_grid(f: FuzzyPolynomial, x, K: int = DEFAULT_K) -> AlphaGridFuzzyNumber:
    """Objective value at ``x`` as alpha-grid cuts (equals the discretized
    triangular value; kept as the grid-native route for gH quotients)."""
    x = _check_point(f, x)
    term_lo, term_hi = f._coefficient_cut_grids(K)
    g = f._monomial_values(x)
    lo, hi = _kernels.accumulate_term_cuts(term_lo, term_hi, g)
    return AlphaGridFuzzyNumber(np.linspace(0.0, 1.0, K + 1), lo, hi)


def level_functions(f: FuzzyPolynomial, x, alpha: float) -> tuple[float, float]:
    """Lower and upper level-function values (f_a^L(x), f_a^U(x))."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    x = _check_point(f, x)
    cl, cp, cu, _, _ = f._packed
    g = f._monomial_values(x)
    cut_lo = (1.0 - alpha) * cl + alpha * cp
    cut_hi = (1.0 - alpha) * cu + alpha * cp
    lower = float(np.sum(np.where(g >= 0.0, cut_lo, cut_hi) * g))
    upper = float(np.sum(np.where(g >= 0.0, cut_hi, cut_lo) * g))
    return lower, upper


def sum_of_level_functions(f: FuzzyPolynomial, x, alpha: float) -> float:
    """(f_a^L + f_a^U)(x), free of the sign split since min + max is the sum.

    This sum stays smooth in x even where the individual level functions
    have kinks, which is what makes the integral optimality conditions
    workable.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    x = _check_point(f, x)
    cl, cp, cu, _, _ = f._packed
    g = f._monomial_values(x)
    coeff_sum = (1.0 - alpha) * (cl + cu) + 2.0 * alpha * cp
    return float(np.dot(coeff_sum, g))


def level_sum_samples(f: FuzzyPolynomial, x, K: int = DEFAULT_K) -> np.ndarray:
    """sum_of_level_functions sampled on the whole {k/K} alpha grid."""
    x = _check_point(f, x)
    term_lo, term_hi = f._coefficient_cut_grids(K)
    g = f._monomial_values(x)
    return _kernels.level_sum_grid(term_lo, term_hi, g)


class ScalarizedPolynomial:
    """Crisp polynomial m(x) = integral of alpha*(f_a^L + f_a^U)(x) d(alpha).

    Same monomials as the source objective, with each fuzzy coefficient
    replaced by its rank.
    """

    __slots__ = ("dimension", "coeffs", "exps", "signs")

    def __init__(self, dimension: int, coeffs, exps, signs):
        self.dimension = int(dimension)
        self.coeffs = np.asarray(coeffs, dtype=np.float64).reshape(-1)
        self.exps = np.asarray(exps, dtype=np.int64).reshape(-1, self.dimension)
        self.signs = np.asarray(signs, dtype=np.float64).reshape(-1)
        if not (self.coeffs.shape[0] == self.exps.shape[0] == self.signs.shape[0]):
            raise ValueError("coeffs, exps and signs must have matching lengths")

    @property
    def term_list(self) -> list[tuple[float, Monomial, int]]:
        return [
            (float(c), Monomial(tuple(e)), int(s))
            for c, e, s in zip(self.coeffs, self.exps, self.signs)
        ]

    def value(self, x) -> float:
        x = np.asarray(x, dtype=np.float64).reshape(-1)
        return _kernels.poly_value(self.coeffs, self.exps, self.signs, x)

    def gradient_value(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64).reshape(-1)
        return _kernels.poly_gradient(self.coeffs, self.exps, self.signs, x)

    def hessian_value(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64).reshape(-1)
        return _kernels.poly_hessian(self.coeffs, self.exps, self.signs, x)

    def differentiate(self, i: int) -> "ScalarizedPolynomial":
        """Exact symbolic partial derivative with respect to coordinate ``i``."""
        if not 0 <= i < self.dimension:
            raise ValueError(f"coordinate index {i} out of range")
        keep = self.exps[:, i] > 0
        coeffs = self.coeffs[keep] * self.exps[keep, i]
        exps = self.exps[keep].copy()
        exps[:, i] -= 1
        return ScalarizedPolynomial(self.dimension, coeffs, exps, self.signs[keep])

    def __repr__(self):
        return f"ScalarizedPolynomial(dimension={self.dimension}, terms={len(self.coeffs)})"


def scalarize(f: FuzzyPolynomial) -> ScalarizedPolynomial:
    """Replace every fuzzy coefficient by its rank."""
    cl, cp, cu, exps, signs = f._packed
    coeffs = (cl + 4.0 * cp + cu) / 6.0
    return ScalarizedPolynomial(f.dimension, coeffs, exps, signs)


def gradient_m(m: ScalarizedPolynomial) -> list[ScalarizedPolynomial]:
    """Symbolic gradient, one polynomial per coordinate."""
    return [m.differentiate(i) for i in range(m.dimension)]


def hessian_m(m: ScalarizedPolynomial) -> list[list[ScalarizedPolynomial]]:
    """Symbolic Hessian; symmetric by construction."""
    grads = gradient_m(m)
    return [[gi.differentiate(j) for j in range(m.dimension)] for gi in grads]


@dataclass(frozen=True)
class FuzzyVector:
    """Vector of fuzzy numbers, e.g. a gH-gradient."""

    components: tuple[AlphaGridFuzzyNumber, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def ranks(self) -> np.ndarray:
        return np.array([rank(c).value for c in self.components])


def _average_levelwise(
    a: AlphaGridFuzzyNumber, b: AlphaGridFuzzyNumber
) -> AlphaGridFuzzyNumber:
    return AlphaGridFuzzyNumber(a.alphas, 0.5 * (a.lo + b.lo), 0.5 * (a.hi + b.hi))


def gh_derivative_numeric(
    f: FuzzyPolynomial, x, i: int, K: int = DEFAULT_K
) -> AlphaGridFuzzyNumber:
    """Partial gH-derivative along coordinate ``i`` by difference quotients.

    Evaluates (1/h) * (f(x + h e_i) -gH f(x)) for the decreasing two-sided
    step ladder ``H_LADDER``.  Succeeds only when every gH-difference
    exists, the two one-sided quotients agree, and the symmetrized
    quotients settle (Cauchy) in the fuzzy metric; otherwise raises
    ``NoGHDerivative``.  Returns the symmetrized quotient at the smallest
    step.
    """
    x = _check_point(f, x)
    if not 0 <= i < f.dimension:
        raise ValueError(f"coordinate index {i} out of range for dimension {f.dimension}")
    base = evaluate_on_grid(f, x, K)
    symmetrized = []
    one_sided_gap = 0.0
    for h in H_LADDER:
        xp = x.copy()
        xm = x.copy()
        xp[i] += h
        xm[i] -= h
        try:
            q_plus = scalar_mul(1.0 / h, gh_difference(evaluate_on_grid(f, xp, K), base))
            q_minus = scalar_mul(-1.0 / h, gh_difference(evaluate_on_grid(f, xm, K), base))
        except NotAFuzzyNumber as exc:
            raise NoGHDerivative(
                f"gH difference quotient at step {h:g} is not a fuzzy number "
                f"(coordinate {i}): {exc}",
                coordinate=i,
            ) from exc
        one_sided_gap = distance(q_plus, q_minus)
        symmetrized.append(_average_levelwise(q_plus, q_minus))

    limit = symmetrized[-1]
    tol = DERIV_TOL * (1.0 + limit.magnitude())
    if one_sided_gap > tol:
        raise NoGHDerivative(
            f"left/right gH quotients disagree by {one_sided_gap:.3e} "
            f"(tolerance {tol:.3e}, coordinate {i})",
            coordinate=i,
        )
    # Cauchy in the fuzzy metric: either the last gap is already below
    # tolerance, or the gaps shrink geometrically down the ladder (kink
    # points give O(h) gaps, so decay is the honest signal there).
    gaps = [
        distance(a, b) for a, b in zip(symmetrized, symmetrized[1:])
    ]
    settling = gaps[-1] <= tol or (
        gaps[-1] <= 0.5 * gaps[-2] and gaps[-2] <= 0.5 * gaps[-3]
    )
    if not settling:
        raise NoGHDerivative(
            f"gH quotient ladder is not settling (gaps {[f'{g:.3e}' for g in gaps]}, "
            f"tolerance {tol:.3e}, coordinate {i})",
            coordinate=i,
        )
    return limit


def gh_gradient(f: FuzzyPolynomial, x, K: int = DEFAULT_K) -> FuzzyVector:
    """gH-gradient: partial gH-derivatives along every coordinate."""
    return FuzzyVector(
        tuple(gh_derivative_numeric(f, x, i, K) for i in range(f.dimension))
    )
