from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import polys
from xns11.data import CURVE_C, F_CUBIC
from xns11.exact import RatFunc
from xns11.field import (
    ID,
    KLEIN_FOUR,
    OMEGA,
    QUOTIENT_MAPS,
    RHO,
    W,
    W_RHO,
    FieldAut,
    FieldElem4,
    NotAnAutomorphism,
    Tf,
    Xf,
    Yf,
    Zf,
    apply_aut,
    c_model,
    checked,
    compose,
    is_klein_four,
    klein_four_table,
    pullback,
    ramification_certificate,
)
from xns11.weierstrass import apply_iso

elements = st.builds(FieldElem4.from_coeffs, polys(1), polys(1), polys(1), polys(1))


def test_relations():
    assert Yf * Yf + Yf == Xf**3 - Xf**2 - 7 * Xf + 10
    assert Tf * Tf == -F_CUBIC(Xf)
    assert Zf * Zf == -(4 * Xf**3 - 4 * Xf**2 - 28 * Xf + 41) * F_CUBIC(Xf)


@settings(max_examples=100)
@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0 and a * 1 == a
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=100)
@given(elements)
def test_norm_descends(f):
    n = f.norm()
    assert isinstance(n, RatFunc)
    assert n.is_zero() == f.is_zero()
    prod = f
    for g in f.conjugates():
        prod = prod * g
    assert prod.in_base_field() and prod.base_value() == n


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        FieldElem4().inverse()


def test_derivative():
    assert Xf.d_dX() == 1
    # differentiate Y^2 + Y = B(X) and T^2 = -F(X)
    assert (2 * Yf + 1) * Yf.d_dX() == 3 * Xf**2 - 2 * Xf - 7
    assert 2 * Tf * Tf.d_dX() == -F_CUBIC.derivative()(Xf)
    f = Xf * Yf * Tf
    g = Yf + Tf
    assert (f * g).d_dX() == f.d_dX() * g + f * g.d_dX()


class TestAutomorphisms:
    def test_preserve_relations(self):
        assert all(s.preserves_relations() for s in KLEIN_FOUR)

    def test_bogus_map_rejected(self):
        with pytest.raises(NotAnAutomorphism):
            checked(FieldAut("bad", Yf + 1, Tf))

    def test_klein_four(self):
        table = klein_four_table()
        assert is_klein_four(table)
        assert table[("w", "rho")] == "w*rho" and table[("rho", "rho")] == "id"
        assert compose(W, RHO).same_action(W_RHO)

    @given(elements, elements)
    def test_automorphisms_are_ring_maps(self, a, b):
        for s in (W, RHO, W_RHO):
            assert apply_aut(s, a * b) == apply_aut(s, a) * apply_aut(s, b)
            assert apply_aut(s, a + b) == apply_aut(s, a) + apply_aut(s, b)

    def test_actions_on_generators(self):
        assert apply_aut(W, Tf) == -Tf and apply_aut(W, Yf) == Yf
        assert apply_aut(RHO, Yf) == -1 - Yf and apply_aut(RHO, Zf) == -Zf
        assert apply_aut(ID, Zf) == Zf


class TestDifferentials:
    def test_ratios(self):
        assert OMEGA["D"] / OMEGA["A"] == 3 * Xf - 1
        assert OMEGA["C"] / OMEGA["A"] == 2 * Yf + 1

    def test_quotient_maps_land(self):
        assert all(q.images_on_target() for q in QUOTIENT_MAPS.values())

    def test_pullbacks(self):
        # dx/(2y+1) on B, dx/z on H, dx/t on C
        assert pullback(QUOTIENT_MAPS["phi_B"], lambda x, y: 1 / (2 * y + 1)).coefficient == OMEGA["B"].coefficient
        assert pullback(QUOTIENT_MAPS["phi_H"], lambda x, z: 1 / z).coefficient == OMEGA["A"].coefficient
        assert pullback(QUOTIENT_MAPS["phi_H"], lambda x, z: (3 * x - 1) / z).coefficient == OMEGA["D"].coefficient
        assert pullback(QUOTIENT_MAPS["phi_C"], lambda x, t: 1 / t).coefficient == OMEGA["C"].coefficient

    def test_c_model(self):
        Ew, iso = c_model()
        assert Ew.ainvs == (0, -7, 0, -24, -304)
        assert iso is not None and apply_iso(Ew, iso) == CURVE_C


def test_ramification_certificate():
    cert = ramification_certificate()
    assert cert["gcd"] == "1"
    assert cert["disc_F"] == -234256
    assert (cert["branch_points"], cert["genus"]) == (6, 4)
    assert cert["ok"]
