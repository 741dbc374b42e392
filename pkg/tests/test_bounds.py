from fractions import Fraction

import numpy as np
import pytest

from cdl import bounds, construct
from cdl.bounds import (Annihilator, BoundError, absolute_code_bound, absolute_design_bound,
                        antipodal_bound, coefficient_bound_check, find_annihilator, lp_bound,
                        projective_code_bound, recheck, tight_annihilator, tightness_check)
from cdl.poly import ZonalPoly, evaluate, expand, jacobi, lowerset_closure, parse_lower_set, x_poly, xbar_poly
from cdl.space import angle_set, fibre
from conftest import cached


class TestAbsolute:
    def test_design_bound(self):
        assert absolute_design_bound(3, "k+l<=2") == 27
        assert absolute_design_bound(5, "cl{(0,0)}") == 1
        assert absolute_design_bound(2, lowerset_closure([(1, 1)])) == 8

    def test_code_bound(self):
        # sum of m_{k,0} for k <= 5 is C(d+5, d)
        assert absolute_code_bound(3, lowerset_closure([(5, 0)])) == 56
        for d in (2, 3, 7):
            assert absolute_code_bound(d, lowerset_closure([(1, 0)])) == d + 1
        assert absolute_code_bound(3, "k+l<=2") == 27


    def test_degree_bound_binomial(self):
        # a degree-5 set in C^3 with 27 points: C(d+s-1, d-1) = 21 would be violated
        X = cached("coxeter-27")
        s = angle_set(X).s
        assert s == 5 and len(X) > 21
        assert len(X) <= absolute_code_bound(3, lowerset_closure([(s, 0)]))


class TestLP:
    @pytest.mark.parametrize("d", [2, 3, 8])
    def test_sic(self, d):
        F = bounds.sic_annihilator(d)
        assert expand(d, F)[(0, 0)] == 1
        assert sum(F.coeffs.values()) == 4 * d * d
        cert = lp_bound(d, F, "upper", bounds.sic_cover_angles(d))
        assert cert.value == Fraction(4 * d * d) and recheck(cert)

    @pytest.mark.parametrize("d", [2, 8, 32])
    def test_kerdock(self, d):
        cert = lp_bound(d, bounds.kerdock_annihilator(d), "upper", bounds.kerdock_angles(d))
        assert cert.value == 4 * d * (d + 1) and recheck(cert)

    @pytest.mark.parametrize("d", [4, 16])
    def test_kerdock_even(self, d):
        cert = lp_bound(d, bounds.kerdock_even_annihilator(d), "upper", bounds.kerdock_even_angles(d))
        assert cert.value == 4 * d * (d + 1)

    def test_simplex_lower(self):
        for d in (2, 3, 5):
            X = construct.regular_simplex_cover(d)
            T = lowerset_closure([(1, 0), (0, 1)])
            cert = lp_bound(d, bounds.simplex_annihilator(d), "lower", angle_set(X).alphas, T)
            assert cert.value == 2 * d + 1 == len(X)

    def test_refuses_on_side_condition(self):
        d = 2
        F = bounds.sic_annihilator(d)
        with pytest.raises(BoundError) as exc:
            lp_bound(d, F, "upper", [0.9])
        assert any("F(" in f for f in exc.value.failures)
        with pytest.raises(BoundError):
            lp_bound(d, -1 * F, "upper", bounds.sic_cover_angles(d))

    def test_refuses_negative_coefficient(self):
        d = 3
        F = jacobi(d, (0, 0)) - jacobi(d, (1, 1))
        with pytest.raises(BoundError):
            lp_bound(d, F, "upper", [])

    def test_certificate_dict(self):
        cert = lp_bound(8, bounds.sic_annihilator(8), "upper", bounds.sic_cover_angles(8))
        out = cert.to_dict()
        assert out["numerator"] == 256 and out["denominator"] == 1 and out["decimal"] == 256.0


class TestAnnihilators:
    def test_product(self):
        ann = find_annihilator([-1, 0], 3)
        x = x_poly(3)
        assert ann.poly == x * x + x
        assert ann.span_set == lowerset_closure([(2, 0)])

    def test_equal_modulus(self):
        d = 2
        ann = find_annihilator(angle_set(fibre(cached("sic-d2"), 4)), d)
        assert ann.poly == x_poly(d) * xbar_poly(d) - Fraction(1, d + 1)
        assert ann.span_set == lowerset_closure([(1, 1)])

    def test_tight_27(self):
        A = angle_set(cached("coxeter-27"))
        F = tight_annihilator(3, "k+l<=2")
        assert np.abs(evaluate(F, A.alphas)).max() < 1e-9
        ann = find_annihilator(A, 3, S_hint="k+l<=2")
        assert ann.annihilates(A.alphas)
        assert all(v == Fraction(1, 27) for v in ann.poly.coeffs.values()) or \
            ann.expansion.terms == {m: Fraction(1, 27) for m in parse_lower_set("k+l<=2").members}

    def test_hint_fails(self):
        with pytest.raises(BoundError):
            find_annihilator([0.3, 0.5, -0.2, 0.1j], 3, S_hint=lowerset_closure([(1, 0)]))

    def test_coefficient_bounds(self):
        d = 3
        S = parse_lower_set("k+l<=2")
        ann = Annihilator.from_poly(tight_annihilator(d, S))
        out = coefficient_bound_check(ann, 27)
        assert all(ok for ok, _ in out.values())
        assert all(r == 27 for _, r in out.values())
        sic = Annihilator.from_poly(bounds.sic_annihilator(2))
        assert all(r >= 16 for _, r in coefficient_bound_check(sic, 16).values())

    def test_coefficient_bounds_negative(self):
        ann = Annihilator.from_poly(jacobi(3, (0, 0)) - jacobi(3, (1, 0)))
        with pytest.raises(BoundError):
            coefficient_bound_check(ann, 5)


class TestAntipodal:
    def test_examples(self):
        c = antipodal_bound(3, lowerset_closure([(1, 0)]), 2)
        assert c.value == 2 and c.branches == {"S_n": 1, "rest": 3}
        c = antipodal_bound(3, lowerset_closure([(2, 0)]), 2)
        assert c.value == 6

    def test_projective_reduction(self):
        S = lowerset_closure([(2, 2)])
        for d in (2, 3):
            c = antipodal_bound(d, S, 5)
            # S_5 is the diagonal part of S here
            assert c.branches["S_n"] == projective_code_bound(d, S)


class TestTightness:
    def test_27(self):
        r = tightness_check(cached("coxeter-27"), "k+l<=2")
        assert r.size_matches and r.annihilates and r.design and r.tight

    def test_cross_polytope(self):
        r = tightness_check(construct.cross_polytope(3), lowerset_closure([(1, 0)]))
        assert not r.tight and r.consistent

    def test_sic(self):
        for S in ("cl{(1,1)}", "cl{(2,0),(1,1)}", "k+l<=2"):
            r = tightness_check(cached("sic-d2"), S)
            assert not r.size_matches and not r.tight
