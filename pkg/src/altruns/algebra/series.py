"""Truncated power series in ``z`` whose coefficients are polynomials in ``x``.

A :class:`TruncatedSeries` of order ``N`` stands for
``c_0(x) + c_1(x) z + ... + c_N(x) z^N + O(z^(N+1))``. Arithmetic between
series of different order raises :class:`OrderMismatch`; call
:meth:`TruncatedSeries.truncate` first to bring them to a common order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..errors import NonUnitDenominator, NonzeroInnerConstant, OrderMismatch
from .poly import Polynomial

DEFAULT_ORDER = 24

_ZERO = Polynomial()


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


class TruncatedSeries:
    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Iterable, order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValueError("series order must be non-negative")
        c = [_as_poly(v) for v in coeffs]
        if len(c) > order + 1:
            raise ValueError(f"{len(c)} coefficients given for a series of order {order}")
        c.extend([_ZERO] * (order + 1 - len(c)))
        self.order = order
        self._c: tuple[Polynomial, ...] = tuple(c)

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return self._c

    def __getitem__(self, n: int) -> Polynomial:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient z^{n} is beyond order {self.order}")
        return self._c[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.order, self._c))

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self._c)
        return f"TruncatedSeries([{terms}], order={self.order})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderMismatch(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self._c[: order + 1], order)

    def egf_coefficients(self) -> list[Polynomial]:
        """``n! * c_n(x)`` for every stored ``n``."""
        return [c * math.factorial(n) for n, c in enumerate(self._c)]

    def _check(self, other: TruncatedSeries) -> None:
        if other.order != self.order:
            raise OrderMismatch(
                f"series of order {self.order} and {other.order}; truncate explicitly first")

    def _lift(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return None
        raise TypeError(f"cannot combine TruncatedSeries with {type(other).__name__}")

    def __add__(self, other) -> TruncatedSeries:
        o = self._lift(other)
        if o is None:
            return TruncatedSeries([self._c[0] + other, *self._c[1:]], self.order)
        return TruncatedSeries([a + b for a, b in zip(self._c, o._c)], self.order)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-a for a in self._c], self.order)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        o = self._lift(other)
        if o is None:
            return TruncatedSeries([a * other for a in self._c], self.order)
        return series_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        o = self._lift(other)
        if o is None:
            other = _as_poly(other)
            if other.degree != 0:
                raise NonUnitDenominator(f"cannot divide a series by {other}")
            return TruncatedSeries([a / other[0] for a in self._c], self.order)
        return series_div(self, o)

    def __rtruediv__(self, other) -> TruncatedSeries:
        return series_div(TruncatedSeries([other], self.order), self)

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        acc = _ZERO
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                acc = acc + ac[i] * bc[k - i]
        out.append(acc)
    return TruncatedSeries(out, n)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``a / b``; the constant coefficient of ``b`` must be a nonzero rational."""
    a._check(b)
    head = b.coeffs[0]
    if head.degree != 0:
        raise NonUnitDenominator(f"constant coefficient {head} is not a nonzero rational")
    inv = 1 / head[0]
    ac, bc = a.coeffs, b.coeffs
    q: list[Polynomial] = []
    for k in range(a.order + 1):
        acc = ac[k]
        for i in range(1, k + 1):
            if bc[i] and q[k - i]:
                acc = acc - bc[i] * q[k - i]
        q.append(acc * inv)
    return TruncatedSeries(q, a.order)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` by Horner's scheme; ``inner`` must vanish at ``z = 0``."""
    outer._check(inner)
    if not inner.coeffs[0].is_zero():
        raise NonzeroInnerConstant(f"inner series has constant term {inner.coeffs[0]}")
    n = outer.order
    result = TruncatedSeries([outer.coeffs[n]], n)
    for k in range(n - 1, -1, -1):
        result = result * inner + outer.coeffs[k]
    return result


# elementary series ---------------------------------------------------------

def z_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries([0, 1] if order >= 1 else [0], order)


def constant_series(value, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries([value], order)


def _egf(values, order: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(v, math.factorial(n)) for n, v in zip(range(order + 1), values)],
                           order)


def _cycle(pattern):
    while True:
        yield from pattern


def exp_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _egf(_cycle([1]), order)


def sin_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _egf(_cycle([0, 1, 0, -1]), order)


def cos_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _egf(_cycle([1, 0, -1, 0]), order)


def sinh_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _egf(_cycle([0, 1]), order)


def cosh_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return _egf(_cycle([1, 0]), order)
