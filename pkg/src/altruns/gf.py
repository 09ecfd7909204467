"""Exponential generating functions checked by exact series expansion.

Each closed-form series is assembled from ``sin``, ``cos`` and ``sinh``
with exact series arithmetic (``tan = sin / cos``, ``sec = 1 / cos``) and
its coefficients, scaled by ``n!``, are compared with values built
elsewhere: ``V(n, k)`` rows, Euler and Springer numbers, and the derivative
polynomials.
"""

from __future__ import annotations

import math
from enum import Enum

from .algebra import (
    DEFAULT_ORDER,
    Polynomial,
    TruncatedSeries,
    cos_series,
    series_compose,
    sin_series,
    sinh_series,
)
from .errors import BoundExceeded
from .families import family_poly, special_number
from .report import VerificationReport, Witness
from .triangles import v_row

MAX_ORDER = DEFAULT_ORDER


class GfId(str, Enum):
    SINH_V = "SINH_V"
    TAN_SEC = "TAN_SEC"
    SPRINGER_GF = "SPRINGER_GF"
    Q_GF = "Q_GF"
    QHAT_GF = "QHAT_GF"


X = Polynomial.x()


def tan_series(order: int) -> TruncatedSeries:
    return sin_series(order) / cos_series(order)


def sec_series(order: int) -> TruncatedSeries:
    return 1 / cos_series(order)


def closed_form(gf: GfId | str, order: int) -> TruncatedSeries:
    """The series on the closed-form side of ``gf``, truncated at ``order``."""
    gf = GfId(gf)
    if gf is GfId.SINH_V:
        return series_compose(sinh_series(order), sinh_series(order) * X)
    if gf is GfId.TAN_SEC:
        return tan_series(order) + sec_series(order)
    if gf is GfId.SPRINGER_GF:
        return 1 / (cos_series(order) - sin_series(order))
    tan = tan_series(order)
    if gf is GfId.Q_GF:
        return (X + tan) / (1 - X * tan)
    return sec_series(order) / (1 - X * tan)


def expected_coefficient(gf: GfId | str, n: int) -> Polynomial:
    """``n!`` times the ``z^n`` coefficient, from the independently built families."""
    gf = GfId(gf)
    if gf is GfId.SINH_V:
        if n % 2 == 0:
            return Polynomial()
        row = v_row((n - 1) // 2)
        return sum((Polynomial.monomial(2 * k + 1, v) for k, v in enumerate(row)), Polynomial())
    if gf is GfId.TAN_SEC:
        return Polynomial([special_number("EULER", n)])
    if gf is GfId.SPRINGER_GF:
        return Polynomial([special_number("SPRINGER", n)])
    if gf is GfId.Q_GF:
        return family_poly("Q", n)
    return family_poly("QHAT", n)


def verify_gf(gf: GfId | str, order: int = DEFAULT_ORDER, max_order: int = MAX_ORDER) -> VerificationReport:
    gf = GfId(gf)
    if order > max_order:
        raise BoundExceeded(f"generating-function order limited to {max_order}", "MAX_ORDER", max_order)
    if order < 0:
        raise ValueError("order must be non-negative")
    series = closed_form(gf, order)
    for n in range(order + 1):
        got = series[n] * math.factorial(n)
        want = expected_coefficient(gf, n)
        if got != want:
            return VerificationReport.failed(gf.value, 0, order, Witness(n, f"{n}! [z^{n}]", got, want))
    return VerificationReport.passed(gf.value, 0, order)
