from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import fractions
from xns11.exact import InsufficientPrecision, LaurentSeries, PoleError

t = LaurentSeries.variable()


def test_geometric_series():
    s = (1 - t).truncate(20).inverse()
    assert all(s[n] == 1 for n in range(20))


def test_precision_tracking():
    s = (1 - t).truncate(10).inverse()
    assert s.relative_precision == 10
    assert (s * s)[9] == 10


def test_constant_term_and_pole():
    assert (t.inverse() * t).constant_term() == 1
    with pytest.raises(PoleError):
        (t.inverse() + 1).constant_term()


def test_exact_inverse_needs_truncation():
    with pytest.raises(ValueError):
        (1 + t).inverse()
    with pytest.raises(InsufficientPrecision):
        LaurentSeries(0, [], prec=5).inverse()


def test_negative_power():
    s = (t**-2) * t**3
    assert s.valuation() == 1


@given(st.lists(fractions, min_size=1, max_size=6).filter(lambda c: c[0] != 0), st.integers(-3, 3))
def test_inverse_roundtrip(coeffs, e):
    s = LaurentSeries(e, coeffs).truncate(e + 12)
    one = s * s.inverse()
    assert one.constant_term() == 1
    assert all(one[n] == 0 for n in range(1, one.relative_precision))


@given(st.lists(fractions, max_size=5), st.lists(fractions, max_size=5))
def test_add_mul_commute(a, b):
    x, y = LaurentSeries(0, a), LaurentSeries(-1, b)
    assert [(x + y)[n] for n in range(-1, 5)] == [(y + x)[n] for n in range(-1, 5)]
    assert [(x * y)[n] for n in range(-1, 8)] == [(y * x)[n] for n in range(-1, 8)]
