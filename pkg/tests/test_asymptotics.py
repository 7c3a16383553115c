"""Asymptotic evaluators: collapses, exact ingredients, drift toward exact."""
from __future__ import annotations

import math
from fractions import Fraction

import pytest

from aocount.asymptotics import (HARDY_RAMANUJAN, HARDY_RAMANUJAN_DISTINCT,
                                 WINDOW_GAMMA, AsymptoticValue,
                                 asy_equal_window, asy_finite_profile,
                                 asy_fixed_part, asy_turan, asy_turan_tutte,
                                 far_tail_bound, tutte_correction)
from aocount.exact import ao_exact, turan_parts


class TestTuranFormula:
    def test_tutte_axis_collapses_at_order_one(self):
        for N, p in [(10, 2), (30, 3), (100, 5)]:
            plain = asy_turan(N, p).log_value
            tutte = asy_turan_tutte(N, p, 1.0).log_value
            assert math.isclose(plain, tutte, rel_tol=1e-14), (N, p)

    def test_tracks_exact_count(self):
        got = asy_turan(40, 3)
        ratio = got.ratio_to(ao_exact(turan_parts(40, 3)))
        assert 0.9 < ratio < 1.1

    def test_bipartite_ratio_from_below(self):
        ratio = asy_turan(120, 2).ratio_to(ao_exact(turan_parts(120, 2)))
        assert 0.95 < ratio < 1.0

    def test_ratio_drifts_toward_one(self):
        r60 = asy_turan(60, 2).ratio_to(ao_exact((30, 30)))
        r120 = asy_turan(120, 2).ratio_to(ao_exact((60, 60)))
        assert abs(r120 - 1.0) < abs(r60 - 1.0)

    def test_ingredients(self):
        val = asy_turan(20, 4)
        assert set(val.ingredients) == {"L", "log_factorial", "log_prefactor",
                                        "log_exponential_part"}
        assert math.isclose(val.ingredients["L"], math.log(4.0 / 3.0), rel_tol=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError):
            asy_turan(10, 1)
        with pytest.raises(ValueError):
            asy_turan(0, 2)
        with pytest.raises(ValueError):
            asy_turan_tutte(10, 2, 0.0)


class TestFixedPart:
    def test_correction_at_order_one(self):
        for k in range(1, 10):
            assert tutte_correction(k, 1.0) == -(k - 1) * (5 * k - 7) / 24.0

    def test_single_size_one_is_exact_factorial(self):
        # k = 1 is the complete graph: prediction collapses to r! exactly
        for r in (3, 10, 40):
            val = asy_fixed_part(1, r)
            assert val.log_value == math.lgamma(r + 1)
            assert val.ratio_to(ao_exact((1,) * r)) == pytest.approx(1.0, rel=1e-12)

    def test_correction_improves_k2(self):
        exact = ao_exact((2,) * 50)
        plain = asy_fixed_part(2, 50, corrected=False).ratio_to(exact)
        corr = asy_fixed_part(2, 50, corrected=True).ratio_to(exact)
        assert abs(corr - 1.0) < abs(plain - 1.0)

    def test_ratio_drifts_toward_one(self):
        r100 = asy_fixed_part(2, 100).ratio_to(ao_exact((2,) * 100))
        r200 = asy_fixed_part(2, 200).ratio_to(ao_exact((2,) * 200))
        assert abs(r200 - 1.0) < abs(r100 - 1.0)
        assert 0.99 < r200 < 1.01

    def test_validation(self):
        with pytest.raises(ValueError):
            asy_fixed_part(0, 5)
        with pytest.raises(ValueError):
            asy_fixed_part(2, 5, s=-1.0)


class TestFiniteProfile:
    def test_collapses_to_fixed_part_for_single_size(self):
        for k, r, s in [(2, 40, 1.0), (3, 25, 1.7), (5, 12, 2.0)]:
            profile = [0] * k
            profile[k - 1] = r
            a = asy_finite_profile(profile, s=s).log_value
            b = asy_fixed_part(k, r, s=s).log_value
            assert math.isclose(a, b, rel_tol=1e-14), (k, r, s)

    def test_all_singletons_is_exact_factorial(self):
        val = asy_finite_profile([25])
        assert val.log_value == math.lgamma(26)

    def test_mixed_profile_tracks_exact(self):
        # three parts of size 2 and two parts of size 3
        val = asy_finite_profile([0, 3, 2])
        assert val.ingredients["N"] == 12.0
        ratio = val.ratio_to(ao_exact((3, 3, 2, 2, 2)))
        assert 0.9 < ratio < 1.1

    def test_mu1_matches_collision_closed_form(self):
        # N mu_1 = sum_j r_j A_j with A_j = -j(j-1)/2
        val = asy_finite_profile([0, 3, 2])
        want = (3 * (-1.0) + 2 * (-3.0)) / 12.0
        assert val.ingredients["mu1"] == want

    def test_validation(self):
        with pytest.raises(ValueError):
            asy_finite_profile([0, 0])
        with pytest.raises(ValueError):
            asy_finite_profile([-1, 2])
        with pytest.raises(ValueError):
            asy_finite_profile([2], s=0.0)


class TestEqualWindow:
    def test_gamma_coefficients_are_exact_fractions(self):
        want = {1: Fraction(-5, 24), 2: Fraction(-1, 8), 3: Fraction(-251, 2880),
                4: Fraction(-19, 288), 5: Fraction(-19087, 362880)}
        assert set(WINDOW_GAMMA) == set(want)
        for j, frac in want.items():
            assert WINDOW_GAMMA[j] == float(frac)

    def test_square_case_order_one_exponent(self):
        # m = n: exponent collapses to -n/2 + 1/2 - 5/24 = -n/2 + 7/24
        for n in (5, 12):
            val = asy_equal_window(n, n, order=1)
            assert math.isclose(val.ingredients["exponent"], -n / 2.0 + 7.0 / 24.0,
                                rel_tol=1e-13)

    def test_agrees_with_fixed_part_regime(self):
        # small m, large n is the fixed-part regime; both track the exact count
        exact = ao_exact((3,) * 100)
        win = asy_equal_window(3, 100).ratio_to(exact)
        assert 0.99 < win < 1.01

    def test_higher_order_tightens_critical_scale(self):
        # at m = n^2 the gamma_2 term is order one, so the order-3 value
        # beats order 1 once n is moderately large
        for n in (10, 12):
            exact = ao_exact((n * n,) * n)
            r1 = asy_equal_window(n * n, n, order=1).ratio_to(exact)
            r3 = asy_equal_window(n * n, n, order=3).ratio_to(exact)
            assert abs(math.log(r3)) < abs(math.log(r1)), n

    def test_order_step_adds_single_gamma_term(self):
        m, n = 25, 5
        a2 = asy_equal_window(m, n, order=2).log_value
        a3 = asy_equal_window(m, n, order=3).log_value
        assert abs((a3 - a2) - WINDOW_GAMMA[3] * m / n**3) < 1e-9

    def test_order_validation(self):
        with pytest.raises(ValueError):
            asy_equal_window(3, 3, order=0)
        with pytest.raises(ValueError):
            asy_equal_window(3, 3, order=6)
        with pytest.raises(ValueError):
            asy_equal_window(0, 3)


class TestFarTail:
    def test_reference_constants(self):
        assert math.isclose(HARDY_RAMANUJAN, 2.565099660323728, rel_tol=1e-15)
        assert math.isclose(HARDY_RAMANUJAN_DISTINCT, 1.8137993642342178,
                            rel_tol=1e-15)

    def test_bound_values(self):
        assert math.isclose(far_tail_bound(2.0), HARDY_RAMANUJAN - 2.0, rel_tol=1e-15)
        assert far_tail_bound(3.0) < 0  # tail events beyond 3 sqrt(n) are rare
        assert far_tail_bound(1.0, distinct=True) == HARDY_RAMANUJAN_DISTINCT - 0.5

    def test_validation(self):
        with pytest.raises(ValueError):
            far_tail_bound(0.0)
        with pytest.raises(ValueError):
            far_tail_bound(-1.0)


class TestAsymptoticValue:
    def test_ratio_roundtrip(self):
        val = AsymptoticValue(log_value=math.log(100.0))
        assert val.ratio_to(100) == pytest.approx(1.0, rel=1e-15)
        assert val.ratio_to(200) == pytest.approx(2.0, rel=1e-15)

    def test_handles_huge_exact_counts(self):
        # counts overflow float range; ratio_to must stay finite
        big = 10**400
        val = AsymptoticValue(log_value=400.0 * math.log(10.0))
        assert val.ratio_to(big) == pytest.approx(1.0, rel=1e-12)
