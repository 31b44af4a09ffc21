from fractions import Fraction

import pytest
import sympy

from xns11.data import CURVE_A, CURVE_D, F_CUBIC, G_CUBIC
from xns11.exact import RatFunc
from xns11.goursat import (
    PRINTED_CONSTANTS,
    GoursatError,
    GoursatParams,
    build_map_one,
    build_map_two,
    chain_constants,
    compare_with_printed,
    congruence_check,
    identify_targets,
    map_degree,
    pullback_ratio,
    ratio_shape,
    sextic_is_squarefree,
    substitute_and_match,
    substituted_h,
)
from xns11.weierstrass import apply_iso

x = sympy.Symbol("x")


@pytest.fixture(scope="module")
def params():
    return substitute_and_match()


def test_substitution_oracle(params):
    # redo the substitution in sympy and read off the normal form
    g1 = sympy.expand((4 * x**3 - 4 * x**2 - 28 * x + 41).subs(x, x + sympy.Rational(1, 3)))
    g2 = sympy.expand((4 * x**3 + 7 * x**2 - 6 * x + 19).subs(x, x + sympy.Rational(1, 3)))
    c1 = sympy.Poly(g1 / sympy.Poly(g1, x).LC(), x).all_coeffs()
    c2 = sympy.Poly(g2 / g2.subs(x, 0), x).all_coeffs()
    assert c1[1] == 0 and c2[2] == 0
    oracle = {
        "a": c1[2] / 3,
        "b": c1[3] / 2,
        "c": c2[1] / 3,
        "d": c2[0] / 2,
        "t": -sympy.Rational(44, 3) ** 2 / (sympy.Poly(g1, x).LC() * g2.subs(x, 0)),
    }
    assert params.as_dict() == {k: Fraction(str(v)) for k, v in oracle.items()}


def test_derived_constants(params):
    assert params.as_dict() == {
        "a": Fraction(-22, 9),
        "b": Fraction(847, 216),
        "c": Fraction(9, 44),
        "d": Fraction(27, 242),
        "t": Fraction(-3),
    }
    assert params.delta1 == Fraction(1331, 1728)
    assert params.delta2 == Fraction(19683, 937024)


def test_printed_constants_differ_only_in_c_and_d(params):
    cmp = compare_with_printed(params)
    assert [k for k, (_, _, eq) in cmp.items() if not eq] == ["c", "d"]
    assert (PRINTED_CONSTANTS["c"], PRINTED_CONSTANTS["d"]) == (params.d, params.c)


def test_printed_constants_break_the_map_identity():
    printed = GoursatParams(**PRINTED_CONSTANTS)
    assert not build_map_one(printed).is_valid()


def test_substituted_model(params):
    h = substituted_h()
    assert h.t == params.t and h.rhs == params.sextic


def test_maps_are_valid(params):
    for m in (build_map_one(params), build_map_two(params)):
        assert m.identity_residual().is_zero()
        assert map_degree(m) == 3


def test_pullback_shapes(params):
    assert ratio_shape(pullback_ratio(build_map_one(params))) == ("constant", 3)
    assert ratio_shape(pullback_ratio(build_map_two(params))) == ("constant*x", 3)


def test_ratio_shape_rejects_others():
    from xns11.exact import poly

    with pytest.raises(GoursatError):
        ratio_shape(RatFunc(poly(1, 0, 0)))


def test_chain_constants(params):
    assert chain_constants(params) == (44, Fraction(44, 3))


def test_targets(params):
    to_a, to_d = identify_targets(params)
    assert apply_iso(build_map_one(params).target.weierstrass(), to_a) == CURVE_A
    assert apply_iso(build_map_two(params).target.weierstrass(), to_d) == CURVE_D


def test_sextic(params):
    assert sextic_is_squarefree(params)


def test_congruence():
    c = congruence_check(100)
    assert c["ok"] and c["skipped"] == [11]
    assert len(c["rows"]) == 24
    with pytest.raises(ValueError):
        congruence_check(3)
