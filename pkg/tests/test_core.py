"""Fuzzy-number types, arithmetic, gH-difference, metric and ranking."""

import numpy as np
import pytest
from scipy.integrate import simpson as scipy_simpson

from fuzzopt import (
    AlphaGridFuzzyNumber,
    GridMismatchError,
    Interval,
    NotAFuzzyNumber,
    Ordering,
    TriangularFuzzyNumber,
    add,
    compare,
    discretize,
    distance,
    gh_difference,
    rank,
    scalar_mul,
)
from helpers import random_triangular, tfn


def rank_quadrature_oracle(t: TriangularFuzzyNumber, K=64) -> float:
    """Independent Simpson quadrature of alpha*(lo+hi) via scipy."""
    alphas = np.linspace(0.0, 1.0, K + 1)
    lo = (1 - alphas) * t.left + alphas * t.peak
    hi = (1 - alphas) * t.right + alphas * t.peak
    return float(scipy_simpson(alphas * (lo + hi), x=alphas))


class TestInterval:
    def test_orders_endpoints(self):
        assert Interval(1.0, 2.0).width == 1.0
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)


class TestTriangular:
    def test_invariant(self):
        with pytest.raises(ValueError):
            tfn(3, 1, 0)

    def test_membership_examples(self):
        t = tfn(0, 1, 3)
        assert t.membership(1.0) == 1.0
        assert t.membership(2.0) == 0.5  # (3-2)/(3-1)
        assert t.membership(-1.0) == 0.0
        assert t.membership(4.0) == 0.0
        assert t.membership(0.5) == 0.5  # rising side

    def test_membership_degenerate_sides(self):
        assert tfn(1, 1, 3).membership(1.0) == 1.0
        assert tfn(0, 2, 2).membership(2.0) == 1.0
        crisp = TriangularFuzzyNumber.crisp(5.0)
        assert crisp.membership(5.0) == 1.0
        assert crisp.membership(5.1) == 0.0

    def test_alpha_cut_examples(self):
        t = tfn(0, 1, 3)
        assert t.alpha_cut(1.0) == Interval(1.0, 1.0)
        assert t.alpha_cut(0.0) == Interval(0.0, 3.0)
        assert t.alpha_cut(0.5) == Interval(0.5, 2.0)

    def test_alpha_cut_domain_error(self):
        with pytest.raises(ValueError):
            tfn(0, 1, 3).alpha_cut(1.5)
        with pytest.raises(ValueError):
            tfn(0, 1, 3).alpha_cut(-0.1)


class TestGrid:
    def test_discretize_k2(self):
        g = discretize(tfn(0, 1, 3), 2)
        assert g.levels == [
            (0.0, Interval(0.0, 3.0)),
            (0.5, Interval(0.5, 2.0)),
            (1.0, Interval(1.0, 1.0)),
        ]

    def test_discretize_crisp(self):
        g = discretize(TriangularFuzzyNumber.crisp(4.0), 8)
        assert np.all(g.lo == 4.0) and np.all(g.hi == 4.0)

    def test_discretize_negative(self):
        g = discretize(tfn(-13, -12, -11), 2)
        assert g.levels == [
            (0.0, Interval(-13.0, -11.0)),
            (0.5, Interval(-12.5, -11.5)),
            (1.0, Interval(-12.0, -12.0)),
        ]

    def test_discretize_needs_k_at_least_2(self):
        with pytest.raises(ValueError):
            discretize(tfn(0, 1, 3), 1)

    def test_constructor_rejects_non_nested(self):
        alphas = np.linspace(0, 1, 3)
        with pytest.raises(NotAFuzzyNumber):
            AlphaGridFuzzyNumber(alphas, [0.0, 0.5, 0.4], [1.0, 1.0, 1.0])
        with pytest.raises(NotAFuzzyNumber):
            AlphaGridFuzzyNumber(alphas, [0.0, 0.0, 0.0], [1.0, 1.1, 1.0])

    def test_constructor_repairs_rounding_jitter(self):
        alphas = np.linspace(0, 1, 3)
        g = AlphaGridFuzzyNumber(alphas, [0.0, 0.5, 0.5 - 1e-13], [1.0, 1.0, 1.0])
        assert np.all(np.diff(g.lo) >= 0.0)

    def test_constructor_rejects_nonuniform_grid(self):
        with pytest.raises(ValueError):
            AlphaGridFuzzyNumber([0.0, 0.4, 1.0], [0, 0, 0], [1, 1, 1])

    def test_arrays_immutable(self):
        g = discretize(tfn(0, 1, 3), 4)
        with pytest.raises(ValueError):
            g.lo[0] = 99.0


class TestArithmetic:
    def test_add_triangular_endpoints(self):
        s = add(discretize(tfn(0, 1, 3)), discretize(tfn(1, 2, 4)))
        expected = discretize(tfn(1, 3, 7))
        assert distance(s, expected) == 0.0

    def test_add_identity(self):
        a = discretize(tfn(2, 5, 6))
        zero = discretize(TriangularFuzzyNumber.crisp(0.0))
        assert distance(add(a, zero), a) == 0.0

    def test_add_negative(self):
        s = add(discretize(tfn(-13, -12, -11)), discretize(tfn(11, 12, 13)))
        assert distance(s, discretize(tfn(-2, 0, 2))) == 0.0

    def test_add_grid_mismatch(self):
        with pytest.raises(GridMismatchError):
            add(discretize(tfn(0, 1, 3), 4), discretize(tfn(0, 1, 3), 8))

    def test_scalar_mul_identity_and_zero(self):
        a = discretize(tfn(0, 1, 3))
        assert distance(scalar_mul(1.0, a), a) == 0.0
        zero = scalar_mul(0.0, a)
        assert np.all(zero.lo == 0.0) and np.all(zero.hi == 0.0)

    def test_scalar_mul_negative_swaps(self):
        out = scalar_mul(-1.0, discretize(tfn(0, 1, 3)))
        assert distance(out, discretize(tfn(-3, -1, 0))) == 0.0

    def test_closure_endpoints_stay_linear_in_alpha(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = discretize(random_triangular(rng))
            b = discretize(random_triangular(rng))
            lam = rng.uniform(-5, 5)
            out = scalar_mul(lam, add(a, b))
            # linear in alpha: second differences vanish
            assert np.max(np.abs(np.diff(out.lo, 2))) <= 1e-12
            assert np.max(np.abs(np.diff(out.hi, 2))) <= 1e-12


class TestGHDifference:
    def test_self_difference_is_crisp_zero(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = discretize(random_triangular(rng))
            d = gh_difference(a, a)
            assert np.all(d.lo == 0.0) and np.all(d.hi == 0.0)

    def test_triangular_example(self):
        d = gh_difference(discretize(tfn(1, 3, 7)), discretize(tfn(1, 2, 4)))
        assert distance(d, discretize(tfn(0, 1, 3))) <= 1e-12
        # case (i) of the definition: b + c recovers a
        recon = add(discretize(tfn(1, 2, 4)), d)
        assert distance(recon, discretize(tfn(1, 3, 7))) <= 1e-12

    def test_nonexistent_difference(self):
        with pytest.raises(NotAFuzzyNumber):
            gh_difference(discretize(tfn(0, 1, 1)), discretize(tfn(0, 0, 1)))

    def test_reconstruction_cases(self):
        rng = np.random.default_rng(13)
        hits = 0
        for _ in range(200):
            a = discretize(random_triangular(rng))
            b = discretize(random_triangular(rng))
            try:
                c = gh_difference(a, b)
            except NotAFuzzyNumber:
                continue
            hits += 1
            # levelwise: b + c = a (case i) or a - c = b (case ii)
            case_i = np.maximum(
                np.abs(b.lo + c.lo - a.lo), np.abs(b.hi + c.hi - a.hi)
            )
            case_ii = np.maximum(
                np.abs(a.lo - c.hi - b.lo), np.abs(a.hi - c.lo - b.hi)
            )
            assert np.all(np.minimum(case_i, case_ii) <= 1e-10)
        assert hits > 50


class TestDistance:
    def test_identity(self):
        a = discretize(tfn(0, 1, 3))
        assert distance(a, a) == 0.0

    def test_parallel_shift(self):
        assert distance(discretize(tfn(0, 1, 3)), discretize(tfn(1, 2, 4))) == 1.0

    def test_sup_attained_at_support(self):
        zero = discretize(TriangularFuzzyNumber.crisp(0.0))
        assert distance(discretize(tfn(0, 1, 3)), zero) == 3.0

    def test_metric_axioms(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            a = discretize(random_triangular(rng))
            b = discretize(random_triangular(rng))
            c = discretize(random_triangular(rng))
            dab = distance(a, b)
            assert dab >= 0.0
            assert abs(dab - distance(b, a)) <= 1e-10
            assert distance(a, a) <= 1e-10
            assert dab <= distance(a, c) + distance(c, b) + 1e-10


class TestRank:
    def test_crisp_rank(self):
        assert rank(TriangularFuzzyNumber.crisp(5.0)).value == 5.0

    def test_closed_form_values(self):
        assert rank(tfn(0, 1, 3)).value == pytest.approx(7 / 6, abs=1e-12)
        assert rank(tfn(-13, -12, -11)).value == pytest.approx(-12.0, abs=1e-12)

    def test_closed_form_vs_quadrature_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            t = random_triangular(rng)
            closed = rank(t).value
            assert abs(closed - rank_quadrature_oracle(t)) <= 1e-10
            assert abs(closed - rank(discretize(t, 64)).value) <= 1e-10

    def test_grid_rank_needs_even_k(self):
        g = discretize(tfn(0, 1, 3), 5)
        with pytest.raises(ValueError):
            rank(g)

    def test_rank_linearity(self):
        rng = np.random.default_rng(29)
        for _ in range(100):
            ta = random_triangular(rng)
            tb = random_triangular(rng)
            lam = rng.uniform(-10, 10)
            a, b = discretize(ta), discretize(tb)
            assert rank(add(a, b)).value == pytest.approx(
                rank(a).value + rank(b).value, abs=1e-10
            )
            assert rank(scalar_mul(lam, a)).value == pytest.approx(
                lam * rank(a).value, abs=1e-10
            )


class TestCompare:
    def test_reflexive(self):
        t = tfn(0, 1, 3)
        assert compare(t, t) is Ordering.EQUIVALENT

    def test_examples(self):
        assert compare(tfn(0, 1, 3), tfn(1, 2, 4)) is Ordering.PRECEDES
        # Example 2 coefficients: incomparable under fuzzy-max, ordered here
        assert compare(tfn(0, 1, 4), tfn(0, 3, 4)) is Ordering.PRECEDES
        assert compare(tfn(0, 3, 4), tfn(0, 1, 4)) is Ordering.SUCCEEDS

    def test_total_and_transitive(self):
        rng = np.random.default_rng(31)
        flips = {
            Ordering.PRECEDES: Ordering.SUCCEEDS,
            Ordering.SUCCEEDS: Ordering.PRECEDES,
            Ordering.EQUIVALENT: Ordering.EQUIVALENT,
        }
        for _ in range(1000):
            a, b, c = (random_triangular(rng) for _ in range(3))
            vab, vbc, vac = compare(a, b), compare(b, c), compare(a, c)
            # totality: every pair gets a verdict, consistent under swap
            assert vab in Ordering and vbc in Ordering and vac in Ordering
            assert compare(b, a) is flips[vab]
            if vab is Ordering.PRECEDES and vbc is Ordering.PRECEDES:
                assert vac is Ordering.PRECEDES
            if vab is Ordering.SUCCEEDS and vbc is Ordering.SUCCEEDS:
                assert vac is Ordering.SUCCEEDS
