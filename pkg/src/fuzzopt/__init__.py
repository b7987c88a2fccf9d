"""Fuzzy-number arithmetic, gH-calculus and optimality conditions for
unconstrained fuzzy polynomial optimization."""

from ._kernels import BACKEND
from .core import (
    DEFAULT_K,
    AlphaGridFuzzyNumber,
    GridMismatchError,
    Interval,
    NotAFuzzyNumber,
    Ordering,
    Rank,
    TriangularFuzzyNumber,
    add,
    compare,
    discretize,
    distance,
    gh_difference,
    rank,
    scalar_mul,
)
from .functions import (
    FuzzyPolynomial,
    FuzzyTerm,
    FuzzyVector,
    Monomial,
    NoGHDerivative,
    ScalarizedPolynomial,
    evaluate,
    evaluate_on_grid,
    gh_derivative_numeric,
    gh_gradient,
    gradient_m,
    hessian_m,
    level_functions,
    level_sum_samples,
    scalarize,
    sum_of_level_functions,
)
from .numerics import (
    Definiteness,
    QuadratureSpec,
    classify_definiteness,
    finite_diff_gradient,
    finite_diff_hessian,
    integrate_alpha,
)
from .optimizer import (
    Classification,
    CriticalPointReport,
    NoCriticalPointFound,
    Problem,
    Sense,
    SolveReport,
    SolverConfig,
    classify,
    find_critical_points,
    solve,
    theorem_gradient_oracle,
    verify_necessary,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT_K",
    "AlphaGridFuzzyNumber",
    "Classification",
    "CriticalPointReport",
    "Definiteness",
    "FuzzyPolynomial",
    "FuzzyTerm",
    "FuzzyVector",
    "GridMismatchError",
    "Interval",
    "Monomial",
    "NoCriticalPointFound",
    "NoGHDerivative",
    "NotAFuzzyNumber",
    "Ordering",
    "Problem",
    "QuadratureSpec",
    "Rank",
    "ScalarizedPolynomial",
    "Sense",
    "SolveReport",
    "SolverConfig",
    "TriangularFuzzyNumber",
    "add",
    "classify",
    "classify_definiteness",
    "compare",
    "discretize",
    "distance",
    "evaluate",
    "evaluate_on_grid",
    "find_critical_points",
    "finite_diff_gradient",
    "finite_diff_hessian",
    "gh_derivative_numeric",
    "gh_difference",
    "gh_gradient",
    "gradient_m",
    "hessian_m",
    "integrate_alpha",
    "level_functions",
    "level_sum_samples",
    "rank",
    "scalar_mul",
    "scalarize",
    "solve",
    "sum_of_level_functions",
    "theorem_gradient_oracle",
    "verify_necessary",
]
