"""Coefficient arithmetic: Gaussian rationals, Laurent polynomials, and
shell-denominator fractions.

The main oracle here is evaluation: substituting random rational values
for (hbar, c, m, p) turns every structural operation into plain Fraction
arithmetic, which catches bookkeeping mistakes without repeating the
implementation.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlorentz.rational import (
    C2_SHELL,
    Coeff,
    GaussRat,
    GR_I,
    GR_ONE,
    GR_ZERO,
    P_ONE,
    P_P,
    Poly,
    SHELL,
    i_power,
)

_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


def _eval_poly(poly: Poly, hv: Fraction, cv: Fraction, mv: Fraction, pv: Fraction) -> GaussRat:
    total = GR_ZERO
    for (eh, ec, em, ep), g in poly.terms.items():
        total = total + g.scale(hv**eh * cv**ec * mv**em * pv**ep)
    return total


def _eval_coeff(coeff: Coeff, hv, cv, mv, pv) -> GaussRat:
    shell = pv * pv + mv * mv * cv * cv
    return _eval_poly(coeff.num, hv, cv, mv, pv).scale(Fraction(1) / shell**coeff.spow)


def _rand_gauss(rng):
    return GaussRat(
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
        Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
    )


def _rand_poly(rng, allow_negative_p=True):
    lo = -2 if allow_negative_p else 0
    out = Poly.zero()
    for _ in range(rng.randint(1, 4)):
        out = out + Poly.monomial(
            _rand_gauss(rng),
            eh=rng.randint(0, 2),
            ec=rng.randint(0, 2),
            em=rng.randint(0, 2),
            ep=rng.randint(lo, 3),
        )
    return out if not out.is_zero() else P_ONE


def _rand_coeff(rng):
    return Coeff(_rand_poly(rng), rng.randint(0, 2))


_SAMPLE_POINTS = [
    (Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5, 3)),
    (Fraction(1, 3), Fraction(2), Fraction(3), Fraction(-7, 2)),
    (Fraction(5), Fraction(1, 2), Fraction(2, 3), Fraction(1)),
]


class TestGaussRat:
    @given(a=_fracs, b=_fracs, c=_fracs, d=_fracs)
    @settings(max_examples=100, deadline=None)
    def test_mul_matches_complex(self, a, b, c, d):
        got = GaussRat(a, b) * GaussRat(c, d)
        assert got == GaussRat(a * c - b * d, a * d + b * c)

    @given(a=_fracs, b=_fracs)
    @settings(max_examples=100, deadline=None)
    def test_division_round_trip(self, a, b):
        g = GaussRat(a, b)
        if not g:
            return
        assert (GR_ONE / g) * g == GR_ONE
        assert g / g == GR_ONE

    def test_i_power_cycle(self):
        assert [i_power(k) for k in range(4)] == [
            GR_ONE,
            GR_I,
            GaussRat(-1),
            GaussRat(0, -1),
        ]
        assert i_power(7) == i_power(3)
        assert i_power(-1) == i_power(3)


class TestPoly:
    def test_ring_axioms_under_evaluation(self):
        rng = random.Random(101)
        for _ in range(40):
            f, g = _rand_poly(rng), _rand_poly(rng)
            for hv, cv, mv, pv in _SAMPLE_POINTS:
                ev = lambda q: _eval_poly(q, hv, cv, mv, pv)
                assert ev(f + g) == ev(f) + ev(g)
                assert ev(f * g) == ev(f) * ev(g)
                assert ev(-f) == -ev(f)

    def test_mul_commutes(self):
        rng = random.Random(77)
        for _ in range(30):
            f, g = _rand_poly(rng), _rand_poly(rng)
            assert f * g == g * f

    def test_pow_is_repeated_mul(self):
        rng = random.Random(5)
        f = _rand_poly(rng)
        assert f.pow(3) == f * f * f
        assert f.pow(0) == P_ONE

    def test_diff_monomials(self):
        m = Poly.monomial(GR_ONE, eh=1, ep=3)
        assert m.diff_p() == Poly.monomial(GaussRat(3), eh=1, ep=2)
        inv = Poly.monomial(GR_ONE, ep=-2)
        assert inv.diff_p() == Poly.monomial(GaussRat(-2), ep=-3)
        assert P_ONE.diff_p().is_zero()

    def test_diff_product_rule(self):
        rng = random.Random(13)
        for _ in range(30):
            f, g = _rand_poly(rng), _rand_poly(rng)
            assert (f * g).diff_p() == f.diff_p() * g + f * g.diff_p()

    def test_shell_division_round_trip(self):
        rng = random.Random(23)
        for _ in range(40):
            f = _rand_poly(rng)
            assert (f * SHELL).div_shell() == f

    def test_shell_division_rejects_remainder(self):
        assert (SHELL * P_P + P_ONE).div_shell() is None
        assert P_P.div_shell() is None
        assert Poly.zero().div_shell() == Poly.zero()

    def test_c2_shell_relation(self):
        assert C2_SHELL == SHELL.shift(ec=2)

    def test_content_extraction(self):
        rng = random.Random(31)
        for _ in range(20):
            f = _rand_poly(rng)
            mono, scale = f.content()
            assert scale > 0
            inv = Fraction(1) / scale
            cofactor = {}
            for key, g in f.terms.items():
                shifted = tuple(a - b for a, b in zip(key, mono))
                # after extraction every exponent is nonnegative and every
                # coefficient is an integer combination
                assert min(shifted) >= 0
                part = g.scale(inv)
                assert part.re.denominator == 1 and part.im.denominator == 1
                cofactor[shifted] = part
            rebuilt = Poly(
                {tuple(a + b for a, b in zip(k, mono)): g.scale(scale) for k, g in cofactor.items()}
            )
            assert rebuilt == f


class TestCoeff:
    def test_constructor_reduces(self):
        rng = random.Random(3)
        for _ in range(25):
            f = _rand_poly(rng)
            assert Coeff(f * SHELL, 2) == Coeff(f, 1)
            assert Coeff(f * SHELL * SHELL, 2) == Coeff(f, 0)

    def test_field_ops_under_evaluation(self):
        rng = random.Random(41)
        for _ in range(30):
            a, b = _rand_coeff(rng), _rand_coeff(rng)
            for hv, cv, mv, pv in _SAMPLE_POINTS:
                ev = lambda q: _eval_coeff(q, hv, cv, mv, pv)
                assert ev(a + b) == ev(a) + ev(b)
                assert ev(a * b) == ev(a) * ev(b)
                assert ev(a - b) == ev(a) - ev(b)

    def test_unequal_shell_powers_align(self):
        a = Coeff(P_ONE, 0)
        b = Coeff(P_P, 2)
        s = a + b
        assert s.spow == 2
        assert s.num == SHELL * SHELL + P_P

    def test_diff_quotient_rule(self):
        # d/dp [N / shell^k] evaluated two ways: structurally, and by
        # differentiating the equivalent single-denominator polynomial
        # N' * shell - 2 k p N over shell^(k+1).
        rng = random.Random(59)
        two_p = Poly.monomial(GaussRat(2), ep=1)
        for _ in range(30):
            a = _rand_coeff(rng)
            got = a.diff_p()
            expect = Coeff(
                a.num.diff_p() * SHELL - two_p.scale(GaussRat(a.spow)) * a.num,
                a.spow + 1,
            )
            assert got == expect

    def test_times_p_over_shell(self):
        a = Coeff(P_ONE, 0)
        assert a.times_p_over_shell() == Coeff(P_P, 1)

    def test_zero_detection(self):
        assert Coeff.zero().is_zero()
        assert not Coeff.one().is_zero()
        rng = random.Random(71)
        a = _rand_coeff(rng)
        assert (a - a).is_zero()


def test_uniqueness_of_representation():
    """Equal values compare equal regardless of construction route."""
    rng = random.Random(97)
    for _ in range(25):
        f = _rand_poly(rng)
        k = rng.randint(0, 2)
        a = Coeff(f, k)
        b = Coeff(f * SHELL, k + 1)
        c = Coeff(f * SHELL * SHELL, k + 2)
        assert a == b == c
        assert hash(a) == hash(b) == hash(c)
