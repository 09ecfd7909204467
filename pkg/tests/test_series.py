from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altruns.algebra import (
    Polynomial,
    TruncatedSeries,
    cos_series,
    exp_series,
    series_compose,
    series_div,
    series_mul,
    sin_series,
    sinh_series,
    z_series,
)
from altruns.errors import NonUnitDenominator, NonzeroInnerConstant, OrderMismatch

x = Polynomial.x()
ORDER = 6

small = st.fractions(min_value=-5, max_value=5, max_denominator=3)
coeff_polys = st.lists(small, max_size=3).map(Polynomial)
series = st.lists(coeff_polys, min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda cs: TruncatedSeries(cs, ORDER))
units = st.tuples(small.filter(bool), st.lists(coeff_polys, min_size=ORDER, max_size=ORDER)).map(
    lambda t: TruncatedSeries([Polynomial([t[0]]), *t[1]], ORDER))


def test_sec_z4():
    sec = 1 / cos_series(8)
    assert sec[4] == Polynomial([Fraction(5, 24)])


def test_identity_multiplication():
    a = TruncatedSeries([1, x, x * x], 4)
    assert a * TruncatedSeries([1], 4) == a


def test_cancel_division():
    tan = sin_series(7) / cos_series(7)
    den = 1 - x * tan
    assert series_mul(den, (x + tan) / den) == x + tan


def test_sinh_composition_z3():
    s = series_compose(sinh_series(7), sinh_series(7) * x)
    assert s[3] == Polynomial([0, 1, 0, 1]) / 6


def test_compose_with_zero():
    outer = exp_series(5)
    assert series_compose(outer, TruncatedSeries([], 5)) == TruncatedSeries([1], 5)


def test_exp_of_z():
    e = series_compose(exp_series(3), z_series(3))
    assert e == TruncatedSeries([1, 1, Fraction(1, 2), Fraction(1, 6)], 3)


def test_nonzero_inner_constant():
    with pytest.raises(NonzeroInnerConstant):
        series_compose(exp_series(3), TruncatedSeries([1, 1], 3))


def test_non_unit_denominator():
    with pytest.raises(NonUnitDenominator):
        series_div(TruncatedSeries([1], 3), TruncatedSeries([0, 1], 3))
    with pytest.raises(NonUnitDenominator):
        series_div(TruncatedSeries([1], 3), TruncatedSeries([x + 1], 3))


def test_mixed_order_refused():
    with pytest.raises(OrderMismatch):
        exp_series(3) * exp_series(4)
    assert exp_series(4).truncate(3) * exp_series(3) == series_mul(exp_series(3), exp_series(3))


def test_truncate_cannot_raise():
    with pytest.raises(OrderMismatch):
        exp_series(3).truncate(5)


def test_pythagoras():
    s, c = sin_series(12), cos_series(12)
    assert s * s + c * c == TruncatedSeries([1], 12)


def test_length_is_order_plus_one():
    assert len(TruncatedSeries([1], 9).coeffs) == 10
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2, 3], 1)


@given(series, units)
def test_div_inverts_mul(a, b):
    assert series_div(series_mul(a, b), b) == a


@given(series, series, series)
def test_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
