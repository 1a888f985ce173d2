from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from prymkit.upoly import (
    UPoly,
    bracket,
    discriminant,
    gcd,
    interpolate,
    resultant,
    valuation,
)
from prymkit.bpoly import BPoly

x = UPoly.x()

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=6
)


def upolys(max_deg=5):
    return st.lists(rationals, min_size=0, max_size=max_deg + 1).map(UPoly)


def test_resultant_linear_factor():
    assert resultant(x * x - 1, x - 2) == 3


def test_resultant_common_root_vanishes():
    p = x**3 - x
    assert resultant(p, p) == 0
    assert resultant(p, x - 1) == 0


def test_resultant_rejects_double_zero():
    with pytest.raises(ValueError):
        resultant(UPoly(), UPoly())


def test_discriminant_examples():
    assert discriminant(x * x - 1) == 4
    assert discriminant(UPoly((0, 0, 1))) == 0
    with pytest.raises(ValueError):
        discriminant(UPoly((5,)))


@given(upolys(4), upolys(4), upolys(3))
@settings(max_examples=60, deadline=None)
def test_ring_distributivity(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(upolys(4), upolys(4))
@settings(max_examples=60, deadline=None)
def test_degree_of_product(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@given(upolys(3), upolys(3), upolys(3))
@settings(max_examples=40, deadline=None)
def test_resultant_multiplicative(p, q, r):
    if not p or not q or not r or p.degree < 1:
        return
    assert resultant(p, q * r) == resultant(p, q) * resultant(p, r)


@given(upolys(5), upolys(5), rationals)
@settings(max_examples=100, deadline=None)
def test_evaluation_homomorphism(p, q, a):
    assert (p * q)(a) == p(a) * q(a)
    assert (p + q)(a) == p(a) + q(a)


@given(upolys(5), upolys(4))
@settings(max_examples=60, deadline=None)
def test_divmod_identity(p, q):
    if not q:
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert not rem or rem.degree < q.degree


def test_gcd_and_valuation():
    p = (x - 1) ** 3 * (x + 2)
    assert gcd(p, (x - 1) * (x - 5)) == x - 1
    assert valuation(p, x - 1) == 3
    assert valuation(p, x + 2) == 1
    assert valuation(p, x - 7) == 0


def test_interpolate_roundtrip():
    p = UPoly((Fraction(1, 3), -2, 0, 5))
    pts = [(Fraction(i), p(Fraction(i))) for i in range(-2, 3)]
    assert interpolate(pts) == p


def test_bracket_basics():
    p = x**4 - 3 * x**2 + 1
    assert bracket(p, p) == UPoly()
    assert bracket(x, UPoly.one()) == UPoly.one()


def test_serialization_roundtrip():
    p = UPoly((Fraction(-3, 7), 0, Fraction(5)))
    assert UPoly.from_json(p.to_json()) == p
    assert p.to_json() == ["-3/7", "0", "5"]


# -- bivariate pieces ------------------------------------------------------------


def test_bpoly_exact_divide_examples():
    xb, yb = BPoly.x(), BPoly.y()
    num = xb * xb - yb * yb
    assert num.exact_divide(xb - yb) == xb + yb
    with pytest.raises(ValueError) as err:
        (xb * xb + BPoly.const(1)).exact_divide(xb - yb)
    assert "remainder" in str(err.value)


def test_bpoly_symmetry_and_eval():
    xb, yb = BPoly.x(), BPoly.y()
    b = xb * yb * 3 + (xb + yb) * 2 + BPoly.const(7)
    assert b.is_symmetric()
    assert b.eval(2, 5) == 3 * 10 + 2 * 7 + 7
    assert b.eval_x(2) == UPoly((11, 8))


def test_bpoly_scaled_subs_parity():
    xb, yb = BPoly.x(), BPoly.y()
    even = xb * xb * 5 + xb * yb - BPoly.const(2)
    scaled = even.scaled_subs(Fraction(12))
    assert scaled.coeff(2, 0) == 60 and scaled.coeff(1, 1) == 12
    with pytest.raises(ValueError):
        (xb + yb).scaled_subs(Fraction(12))
