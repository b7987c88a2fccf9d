"""Builders and independent oracles shared across the test modules."""

from pathlib import Path

import numpy as np

from fuzzopt import FuzzyPolynomial, FuzzyTerm, Monomial, TriangularFuzzyNumber

PROBLEMS_DIR = Path(__file__).resolve().parent.parent / "problems"


def tfn(left, peak, right) -> TriangularFuzzyNumber:
    return TriangularFuzzyNumber(float(left), float(peak), float(right))


def term(coef, exps, sign=1) -> FuzzyTerm:
    return FuzzyTerm(coefficient=tfn(*coef), monomial=Monomial(tuple(exps)), sign=sign)


def poly(dimension, *terms) -> FuzzyPolynomial:
    return FuzzyPolynomial(dimension=dimension, terms=tuple(terms))


def ex1_objective(a=(0, 1, 3), b=(-13, -12, -11)) -> FuzzyPolynomial:
    """a*x^3 + b*x^2 with triangular coefficients."""
    return poly(1, term(a, (3,)), term(b, (2,)))


def ex2_objective() -> FuzzyPolynomial:
    """a*x^2 - b*x + v with the incomparable-under-fuzzy-max data."""
    return poly(
        1,
        term((0, 1, 4), (2,)),
        term((0, 3, 4), (1,), sign=-1),
        term((1, 2, 4), (0,)),
    )


def pathak_objective() -> FuzzyPolynomial:
    return poly(
        2,
        term((0, 2, 4), (2, 0)),
        term((0, 2, 4), (0, 2)),
        term((1, 3, 5), (0, 0)),
    )


def case_study_objective() -> FuzzyPolynomial:
    return poly(
        2,
        term((19, 20, 21), (1, 0)),
        term((25, 26, 27), (0, 1)),
        term((2, 4, 6), (1, 1)),
        term((-6, -4, -2), (2, 0)),
        term((-5, -3, -2), (0, 2)),
    )


def random_triangular(rng, lo=-20.0, hi=20.0) -> TriangularFuzzyNumber:
    vals = np.sort(rng.uniform(lo, hi, size=3))
    return tfn(*vals)


def random_polynomial(rng, max_dim=3, max_degree=4, coef_range=20.0) -> FuzzyPolynomial:
    n = int(rng.integers(1, max_dim + 1))
    n_terms = int(rng.integers(1, 6))
    terms = []
    for _ in range(n_terms):
        exps = rng.integers(0, max_degree + 1, size=n)
        while exps.sum() > max_degree:
            exps = rng.integers(0, max_degree + 1, size=n)
        sign = 1 if rng.random() < 0.5 else -1
        terms.append(
            term(
                np.sort(rng.uniform(-coef_range, coef_range, size=3)),
                tuple(int(e) for e in exps),
                sign=sign,
            )
        )
    return poly(n, *terms)


def mixed_sign_point(rng, dimension, scale=3.0) -> np.ndarray:
    """Random point with at least one negative coordinate when n > 1."""
    x = rng.uniform(-scale, scale, size=dimension)
    if dimension > 1 and np.all(x >= 0):
        x[int(rng.integers(0, dimension))] *= -1.0
    return x
