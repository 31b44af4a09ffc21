from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.ntheory.elliptic_curve import EllipticCurve as SympyCurve

from xns11.data import CONDUCTOR_CURVES, CURVE_C, GENERATOR_P, POINT_Q, XNS_PLUS
from xns11.exact.integers import primes_up_to
from xns11.weierstrass import (
    INFINITY,
    BadReduction,
    CurvePoint,
    IsoData,
    NotOnCurve,
    SingularCurve,
    WeierstrassCurve,
    apply_iso,
    count_points_mod_p,
    is_good_prime,
    is_isomorphic_over_Q,
    iso_map_point,
    modular_poly2_check,
    phi2,
    phi2_coefficients,
    twisted_cubic_to_weierstrass,
)

E = XNS_PLUS
multiples = st.integers(min_value=-7, max_value=7)


@pytest.mark.parametrize("name", "ABCD")
def test_invariants_match_sympy(name):
    c = CONDUCTOR_CURVES[name]
    a1, a2, a3, a4, a6 = (int(v) for v in c.ainvs)
    oracle = SympyCurve(a4, a6, a1, a2, a3)
    assert c.j == Fraction(str(oracle.j_invariant))
    assert c.invariants().disc == oracle.discriminant


def test_conductor_121_j_values():
    js = {k: c.j for k, c in CONDUCTOR_CURVES.items()}
    assert js == {"A": -24729001, "B": -32768, "C": -121, "D": Fraction(-4096, 11)}


def test_c4_c6_relation():
    inv = CURVE_C.invariants()
    assert 1728 * inv.disc == inv.c4**3 - inv.c6**2


def test_singular_rejected():
    with pytest.raises(SingularCurve):
        WeierstrassCurve(0, 0, 0, 0, 0)


def test_points():
    assert E.contains(GENERATOR_P) and E.contains(POINT_Q) and E.contains(INFINITY)
    with pytest.raises(NotOnCurve):
        E.point(1, 1)


def test_negation_and_small_multiples():
    assert E.neg(GENERATOR_P) == CurvePoint(4, 5)
    assert E.mul(-3, GENERATOR_P) == POINT_Q
    assert E.mul(0, GENERATOR_P).is_infinity
    assert E.add(GENERATOR_P, E.neg(GENERATOR_P)).is_infinity


@settings(max_examples=100)
@given(multiples, multiples, multiples)
def test_group_law_associative(a, b, c):
    P, Q, R = (E.mul(k, GENERATOR_P) for k in (a, b, c))
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.add(E.add(P, Q), R) == E.mul(a + b + c, GENERATOR_P)


def test_doubling_matches_tangent_slope():
    # independent tangent computation with sympy
    x, y = sympy.symbols("x y")
    eq = y**2 + y - (x**3 - x**2 - 7 * x + 10)
    slope = (-sympy.diff(eq, x) / sympy.diff(eq, y)).subs({x: 4, y: -6})
    x3 = slope**2 - (-1) - 2 * 4
    y3 = -(slope * (x3 - 4) - 6) - 1
    assert E.mul(2, GENERATOR_P) == CurvePoint(Fraction(str(x3)), Fraction(str(y3)))


class TestIsomorphism:
    def test_j0_example(self):
        E1 = WeierstrassCurve(0, 0, 0, 0, 1)
        E2 = WeierstrassCurve(0, 0, 0, 0, 64)
        iso = is_isomorphic_over_Q(E1, E2)
        assert iso is not None and abs(iso.u) == Fraction(1, 2)
        assert apply_iso(E1, iso) == E2
        assert iso_map_point(iso, CurvePoint(2, 3)) in (CurvePoint(8, 24), CurvePoint(8, -24))

    def test_j1728_twists(self):
        assert is_isomorphic_over_Q(WeierstrassCurve(0, 0, 0, 1, 0), WeierstrassCurve(0, 0, 0, 16, 0)) is not None
        assert is_isomorphic_over_Q(WeierstrassCurve(0, 0, 0, 1, 0), WeierstrassCurve(0, 0, 0, 4, 0)) is None

    def test_quadratic_twist_is_not_isomorphic(self):
        assert is_isomorphic_over_Q(WeierstrassCurve(0, 0, 0, -1, 1), WeierstrassCurve(0, 0, 0, -4, -8)) is None

    def test_different_j(self):
        assert is_isomorphic_over_Q(CONDUCTOR_CURVES["A"], CONDUCTOR_CURVES["B"]) is None

    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool),
        st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3),
    )
    def test_random_change_of_variables(self, u, r, s, t):
        iso = IsoData(Fraction(u), Fraction(r), Fraction(s), Fraction(t))
        E2 = apply_iso(E, iso)
        assert E2.j == E.j
        assert E2.contains(iso_map_point(iso, GENERATOR_P))
        found = is_isomorphic_over_Q(E, E2)
        assert found is not None and apply_iso(E, found) == E2

    def test_twisted_cubic(self):
        Ew = twisted_cubic_to_weierstrass(-1, 7, -24, 304)
        assert Ew.ainvs == (0, -7, 0, -24, -304)
        assert is_isomorphic_over_Q(Ew, CURVE_C) is not None


def brute_force_count(curve: WeierstrassCurve, p: int) -> int:
    a = [int(c) % p for c in curve.ainvs]
    n = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a[0] * x * y + a[2] * y - x**3 - a[1] * x * x - a[3] * x - a[4]) % p == 0:
                n += 1
    return p + 1 - n


@pytest.mark.parametrize("name", "ABCD")
def test_point_counts_match_brute_force(name):
    c = CONDUCTOR_CURVES[name]
    for p in primes_up_to(60):
        if p == 11:
            assert not is_good_prime(c, p)
            with pytest.raises(BadReduction):
                count_points_mod_p(c, p)
            continue
        assert count_points_mod_p(c, p) == brute_force_count(c, p)


def test_known_traces():
    A, D = CONDUCTOR_CURVES["A"], CONDUCTOR_CURVES["D"]
    assert (count_points_mod_p(A, 2), count_points_mod_p(D, 2)) == (-1, 2)


def test_count_rejects_composite():
    with pytest.raises(ValueError):
        count_points_mod_p(E, 9)


class TestPhi2:
    def test_specialization_at_zero(self):
        y = sympy.Symbol("y")
        poly_y = sum(c * 0**i * y**k for (i, k), c in phi2_coefficients().items() if i == 0)
        assert sympy.expand(poly_y - (y - 54000) ** 3) == 0

    @given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
    def test_symmetric(self, a, b):
        assert phi2(a, b) == phi2(b, a)

    @pytest.mark.parametrize("pair", [(1728, 287496), (-3375, 16581375), (8000, 8000), (0, 54000)])
    def test_cm_two_isogenies(self, pair):
        assert modular_poly2_check(*pair)

    def test_non_isogenous(self):
        assert not modular_poly2_check(0, 1728)
