"""The differential ring Q[c, t]/(t^2 = c - 1).

Here ``c`` stands for csc^2(theta) and ``t`` for cot(theta). Differentiation in
theta acts by ``D(c) = -2 c t`` and ``D(t) = -c``; the relation
``cot^2 = csc^2 - 1`` keeps every element in the normal form
``even(c) + t * odd(c)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial

_C = Polynomial.x()
_C_MINUS_1 = Polynomial([-1, 1])


@dataclass(frozen=True)
class CotCscExpression:
    even: Polynomial = Polynomial()
    odd: Polynomial = Polynomial()

    @classmethod
    def c(cls) -> CotCscExpression:
        return cls(_C, Polynomial())

    @classmethod
    def t(cls) -> CotCscExpression:
        return cls(Polynomial(), Polynomial([1]))

    @classmethod
    def constant(cls, value) -> CotCscExpression:
        return cls(Polynomial([value]), Polynomial())

    def __add__(self, other: CotCscExpression) -> CotCscExpression:
        return CotCscExpression(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: CotCscExpression) -> CotCscExpression:
        return CotCscExpression(self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> CotCscExpression:
        return CotCscExpression(-self.even, -self.odd)

    def __mul__(self, other) -> CotCscExpression:
        if not isinstance(other, CotCscExpression):
            return CotCscExpression(self.even * other, self.odd * other)
        # (e1 + t o1)(e2 + t o2) with t^2 -> c - 1
        even = self.even * other.even + _C_MINUS_1 * self.odd * other.odd
        odd = self.even * other.odd + self.odd * other.even
        return CotCscExpression(even, odd)

    __rmul__ = __mul__

    def derive(self) -> CotCscExpression:
        return cotcsc_derive(self)


def cotcsc_derive(e: CotCscExpression) -> CotCscExpression:
    """Derivative in theta, already reduced to normal form.

    For ``f(c) + t g(c)``:
    ``D f(c) = -2 c t f'(c)`` and
    ``D(t g(c)) = -c g(c) - 2 c t^2 g'(c) = -c g(c) - 2 c (c - 1) g'(c)``.
    """
    even = -(_C * e.odd) - 2 * _C * _C_MINUS_1 * e.odd.derivative()
    odd = -2 * _C * e.even.derivative()
    return CotCscExpression(even, odd)


def csc_power_derivatives(order: int) -> list[CotCscExpression]:
    """``[D^0 c, D^1 c, ..., D^order c]``."""
    out = [CotCscExpression.c()]
    for _ in range(order):
        out.append(cotcsc_derive(out[-1]))
    return out
