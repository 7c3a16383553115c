"""Blow-ups of small base graphs: saddle data, Hessians, predictions."""
from __future__ import annotations

import math

import pytest

from aocount.asymptotics import asy_turan_tutte
from aocount.blowup import (BlowupBase, C5HessianReport, blowup_vertex_transitive,
                            c5_closed_form_matrix, c5_hessian_check)
from aocount.exact import ao_exact
from aocount.numdiff import leading_principal_minors

SQRT5 = math.sqrt(5.0)


class TestBaseConstruction:
    def test_complete_base_independence_coefficients(self):
        for p in (2, 3, 5, 7):
            base = BlowupBase.complete(p)
            want = (1, p) + (0,) * (p - 1)
            assert base.independence_coefficients == want

    def test_cycle_base_c5(self):
        base = BlowupBase.cycle(5)
        assert base.independence_coefficients == (1, 5, 5, 0, 0, 0)

    def test_cycle_base_c4(self):
        base = BlowupBase.cycle(4)
        assert base.independence_coefficients == (1, 4, 2, 0, 0)

    def test_edges_canonicalized(self):
        base = BlowupBase(3, [(1, 0), (0, 1), (2, 1)])
        assert base.edges == ((0, 1), (1, 2))

    def test_ind_poly_and_derivative(self):
        base = BlowupBase.cycle(5)
        z = 0.37
        assert math.isclose(base.ind_poly(z), 1 + 5 * z + 5 * z * z, rel_tol=1e-15)
        assert math.isclose(base.ind_poly_deriv(z), 5 + 10 * z, rel_tol=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError):
            BlowupBase(0, [])
        with pytest.raises(ValueError):
            BlowupBase(17, [])
        with pytest.raises(ValueError):
            BlowupBase(3, [(0, 3)])
        with pytest.raises(ValueError):
            BlowupBase(3, [(1, 1)])
        with pytest.raises(ValueError):
            BlowupBase.complete(1)
        with pytest.raises(ValueError):
            BlowupBase.cycle(2)


class TestSaddleData:
    def test_complete_base_closed_forms(self):
        for p in (2, 3, 5, 7):
            base = BlowupBase.complete(p)
            L = math.log(p / (p - 1.0))
            assert abs(base.tau - 1.0 / p) < 1e-12, p
            assert abs(base.R - L) < 1e-12, p
            assert abs(base.A_H - L * (p - 1) / p) < 1e-12, p

    def test_pentagon_closed_forms(self):
        base = BlowupBase.cycle(5)
        tau = (5.0 - SQRT5) / 10.0
        assert abs(base.tau - tau) < 1e-12
        assert 0.323 < base.R < 0.324
        assert abs(base.A_H - base.R * (1.0 - tau) / SQRT5) < 1e-12

    def test_square_cycle_closed_form(self):
        base = BlowupBase.cycle(4)
        # I(-t) = 1 - 4t + 2t^2 vanishes first at 1 - sqrt(2)/2
        assert abs(base.tau - (1.0 - math.sqrt(2.0) / 2.0)) < 1e-12

    def test_interior_root_of_reducible_polynomial(self):
        # one edge on three vertices: I(-t) = (1 - t)(1 - 2t); the interior
        # root 1/2 is found, the boundary root 1 ignored
        base = BlowupBase(3, [(0, 1)])
        assert abs(base.tau - 0.5) < 1e-12

    def test_rootless_bases_rejected(self):
        with pytest.raises(ValueError):
            BlowupBase(1, [])  # I(-t) = 1 - t: boundary root only
        with pytest.raises(ValueError):
            BlowupBase(2, [])  # I(-t) = (1 - t)^2


class TestPhaseMachinery:
    def test_constraint_vanishes_at_symmetric_point(self):
        for base in (BlowupBase.complete(3), BlowupBase.cycle(5)):
            val = base.constraint([base.R] * base.p)
            assert abs(val) < 1e-12

    def test_solve_last_coordinate_recovers_symmetric_point(self):
        base = BlowupBase.cycle(5)
        h = base.solve_last_coordinate([base.R] * 4)
        assert abs(h - base.R) < 1e-12

    def test_gradient_vanishes_at_symmetric_point(self):
        for base in (BlowupBase.complete(4), BlowupBase.cycle(5)):
            y0 = [base.R] * (base.p - 1)
            alphas = [1.0 / base.p] * base.p
            g = base.reduced_phase_gradient(y0, alphas)
            assert max(abs(v) for v in g) < 1e-10

    def test_constraint_partial_matches_difference(self):
        base = BlowupBase.cycle(5)
        y = [0.31, 0.35, 0.29, 0.33, 0.30]
        h = 1e-6
        for j in range(5):
            up = list(y)
            dn = list(y)
            up[j] += h
            dn[j] -= h
            slope = (base.constraint(up) - base.constraint(dn)) / (2 * h)
            assert abs(slope - base.constraint_partial(y, j)) < 1e-8


class TestPentagonHessian:
    def test_report_values(self):
        rep = c5_hessian_check()
        assert isinstance(rep, C5HessianReport)
        assert rep.matrix_match_error < 1e-5
        assert all(m > 0 for m in rep.minors)
        assert abs(rep.tau - (5.0 - SQRT5) / 10.0) < 1e-12

    def test_minor_closed_forms(self):
        rep = c5_hessian_check()
        R = rep.R
        d1 = 2.0 * (1.0 - R)
        d2 = (6.0 + (2 * SQRT5 - 10) * R + (1 - 3 * SQRT5) * R * R) / 2.0
        d3 = (1 - 2 * R) * (4 + (3 * SQRT5 - 1) * R + (1 - SQRT5) * R * R)
        quartic = ((3 + 2 * SQRT5) * R**4 + (12 + 2 * SQRT5) * R**3
                   + (-5 + 4 * SQRT5) * R**2 + (2 - 4 * SQRT5) * R - 3)
        d4 = (10.0 * (2 * R - 1) ** 2 * quartic
              / ((3 * SQRT5 - 1) * R * R + (10 - 2 * SQRT5) * R - 6))
        got = rep.minors
        for want, have in zip((d1, d2, d3, d4), got):
            assert abs(want - have) < 1e-10, (want, have)

    def test_closed_form_matrix_is_symmetric(self):
        m = c5_closed_form_matrix(0.3235)
        for i in range(4):
            for j in range(4):
                assert m[i][j] == m[j][i]

    def test_minors_computed_from_matrix(self):
        rep = c5_hessian_check()
        direct = leading_principal_minors(c5_closed_form_matrix(rep.R))
        assert tuple(direct) == rep.minors


class TestBlowupPrediction:
    def test_complete_base_matches_balanced_closed_form(self):
        # a complete base blown up evenly is the balanced multipartite
        # graph; the two instruments agree to O(1/N) plus Hessian noise
        cases = [(2, 100_000_000), (3, 99_999_999), (5, 100_000_000)]
        for p, N in cases:
            base = BlowupBase.complete(p)
            for s in (1.0, 2.0, 3.0):
                via_blowup = blowup_vertex_transitive(base, N, s=s).log_value
                closed = asy_turan_tutte(N, p, s).log_value
                assert abs(via_blowup - closed) < 1e-6, (p, s)

    def test_square_cycle_blowup_is_bipartite(self):
        # blowing up a 4-cycle by n merges opposite classes: the result is
        # the complete bipartite graph on 2n + 2n vertices, counted exactly
        base = BlowupBase.cycle(4)
        for n, lo in ((25, 0.97), (50, 0.98)):
            val = blowup_vertex_transitive(base, 4 * n)
            ratio = val.ratio_to(ao_exact((2 * n, 2 * n)))
            assert lo < ratio < 1.0, n

    def test_ratio_drifts_toward_one(self):
        base = BlowupBase.cycle(4)
        r25 = blowup_vertex_transitive(base, 100).ratio_to(ao_exact((50, 50)))
        r50 = blowup_vertex_transitive(base, 200).ratio_to(ao_exact((100, 100)))
        assert abs(r50 - 1.0) < abs(r25 - 1.0)

    def test_ingredients(self):
        base = BlowupBase.cycle(5)
        val = blowup_vertex_transitive(base, 50)
        assert val.ingredients["class_size"] == 10.0
        assert val.ingredients["tau"] == base.tau
        assert val.ingredients["hessian_det"] > 0

    def test_validation(self):
        base = BlowupBase.cycle(5)
        with pytest.raises(ValueError):
            blowup_vertex_transitive(base, 51)  # not a multiple of 5
        with pytest.raises(ValueError):
            blowup_vertex_transitive(base, 0)
        with pytest.raises(ValueError):
            blowup_vertex_transitive(base, 50, s=0.0)
