"""Exact arithmetic: polynomials, truncated series, and the cot/csc ring."""

from .cotcsc import CotCscExpression, cotcsc_derive, csc_power_derivatives
from .poly import Polynomial, poly_divexact, poly_divmod, poly_mul, substitute_linear_fraction
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    constant_series,
    cos_series,
    cosh_series,
    exp_series,
    series_compose,
    series_div,
    series_mul,
    sin_series,
    sinh_series,
    z_series,
)

__all__ = [
    "CotCscExpression", "cotcsc_derive", "csc_power_derivatives",
    "Polynomial", "poly_divexact", "poly_divmod", "poly_mul", "substitute_linear_fraction",
    "DEFAULT_ORDER", "TruncatedSeries", "constant_series", "cos_series", "cosh_series",
    "exp_series", "series_compose", "series_div", "series_mul", "sin_series", "sinh_series",
    "z_series",
]
