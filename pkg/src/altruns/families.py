"""The polynomial families and the Euler/Springer numbers.

Each family has exactly one construction route:

``R``     alternating runs, by the derivative recurrence from ``R_2 = 2x``
          (``R_1 = 1`` encodes the single run-free permutation of ``[1]``)
``PHAT``  left peaks, by the derivative recurrence from ``1`` and ``1 + x``
``Q``     tangent derivative polynomials, ``Q_{n+1} = (1 + x^2) Q_n'``
``QHAT``  secant derivative polynomials, ``(1 + x^2) Q_n' + x Q_n``
``P``     interior peaks, from the central factorial closed form for ``x P_n``
``RHAT``  up-signed alternating runs, ``x (1+x)^(n-1) PHAT_n(2x / (1+x))``
"""

from __future__ import annotations

import math
import threading
from typing import Callable

from .algebra import Polynomial, poly_divexact, substitute_linear_fraction
from .errors import IntegralityViolation, UnsupportedIndex
from .triangles import u_number

FAMILIES = ("R", "P", "PHAT", "RHAT", "Q", "QHAT")
SPECIALS = ("EULER", "SPRINGER")

X = Polynomial.x()
ONE = Polynomial([1])
ONE_PLUS_X2 = Polynomial([1, 0, 1])


class _Ladder:
    """Family members ``f(start), f(start+1), ...`` built incrementally.

    ``step(m, prev)`` returns member ``m`` from member ``m - 1``.
    """

    def __init__(self, seeds: list[Polynomial], start: int,
                 step: Callable[[int, Polynomial], Polynomial]):
        self._items = list(seeds)
        self._start = start
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Polynomial:
        i = n - self._start
        if i >= len(self._items):
            with self._lock:
                while i >= len(self._items):
                    m = self._start + len(self._items)
                    self._items.append(self._step(m, self._items[-1]))
        return self._items[i]


def _r_step(m: int, prev: Polynomial) -> Polynomial:
    # R_m from R_{m-1}:  R_{n+2} = x(nx + 2) R_{n+1} + x(1 - x^2) R_{n+1}'  with n = m - 2
    n = m - 2
    return X * Polynomial([2, n]) * prev + X * Polynomial([1, 0, -1]) * prev.derivative()


def _phat_step(m: int, prev: Polynomial) -> Polynomial:
    # PHAT_{n+1} = (nx + 1) PHAT_n + 2x(1 - x) PHAT_n'  with n = m - 1
    n = m - 1
    return Polynomial([1, n]) * prev + Polynomial([0, 2, -2]) * prev.derivative()


def _q_step(m: int, prev: Polynomial) -> Polynomial:
    return ONE_PLUS_X2 * prev.derivative()


def _qhat_step(m: int, prev: Polynomial) -> Polynomial:
    return ONE_PLUS_X2 * prev.derivative() + X * prev


# R_1 = 1 is a convention; the recurrence proper starts at R_2.
_R = _Ladder([ONE, Polynomial([0, 2])], 1, _r_step)
_PHAT = _Ladder([ONE, Polynomial([1, 1])], 1, _phat_step)
_Q = _Ladder([X], 0, _q_step)
_QHAT = _Ladder([ONE], 0, _qhat_step)

_P_CACHE: dict[int, Polynomial] = {}
_RHAT_CACHE: dict[int, Polynomial] = {}


def peak_closed_form(n: int) -> Polynomial:
    """``x P_n(x)`` as the sum over ``U(m, j)`` with ``m = ceil(n / 2)``."""
    m = (n + 1) // 2
    odd = n % 2 == 1
    one_minus_x = Polynomial([1, -1])
    total = Polynomial()
    for j in range(1, m + 1):
        weight = 4 ** (m - j) * math.factorial(2 * j - 1 if odd else 2 * j) * u_number(m, j)
        total = total + X ** j * one_minus_x ** (m - j) * weight
    return total


def _p(n: int) -> Polynomial:
    if n not in _P_CACHE:
        _P_CACHE[n] = poly_divexact(peak_closed_form(n), X)
    return _P_CACHE[n]


def _rhat(n: int) -> Polynomial:
    if n not in _RHAT_CACHE:
        _RHAT_CACHE[n] = X * substitute_linear_fraction(_PHAT[n], 2, 0, 1, 1, n - 1)
    return _RHAT_CACHE[n]


def family_poly(family: str, n: int) -> Polynomial:
    """Member ``n`` of the named family."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    low = 0 if family in ("Q", "QHAT") else 1
    if n < low:
        raise UnsupportedIndex(f"{family}_{n} is undefined; n must be >= {low}")
    if family == "R":
        return _R[n]
    if family == "PHAT":
        return _PHAT[n]
    if family == "Q":
        return _Q[n]
    if family == "QHAT":
        return _QHAT[n]
    if family == "P":
        return _p(n)
    return _rhat(n)


def special_number(which: str, n: int) -> int:
    """``EULER``: E_n, read off ``Q_n(0)`` (odd n) or ``QHAT_n(0)`` (even n).
    ``SPRINGER``: s_n = ``QHAT_n(1)``.
    """
    if n < 0:
        raise UnsupportedIndex("special numbers are indexed from 0")
    if which == "EULER":
        value = family_poly("Q", n)(0) if n % 2 else family_poly("QHAT", n)(0)
    elif which == "SPRINGER":
        value = family_poly("QHAT", n)(1)
    else:
        raise ValueError(f"unknown special sequence {which!r}; expected one of {SPECIALS}")
    if value.denominator != 1:
        raise IntegralityViolation(f"{which}({n}) evaluated to {value}")
    return value.numerator
