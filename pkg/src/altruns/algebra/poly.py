"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

from ..errors import DegreeExceedsHomogenization, IntegralityViolation, NonExactDivision

Scalar = int | Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """Immutable polynomial in one indeterminate ``x``.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are stripped on
    construction, so the zero polynomial has an empty coefficient tuple and
    ``degree`` is ``None``.

    >>> p = Polynomial([1, 1]) * Polynomial([1, -1])
    >>> p
    Polynomial([1, 0, -1])
    >>> p.degree
    2
    >>> Polynomial().degree is None
    True
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [_as_fraction(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, c: list[Fraction]) -> Polynomial:
        # Trusted constructor: c already holds Fractions.
        while c and not c[-1]:
            c.pop()
        p = cls.__new__(cls)
        p._c = tuple(c)
        return p

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls([value])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> Polynomial:
        if k < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls([0] * k + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._c)}])"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] += v
        return Polynomial._raw(c)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw([-v for v in self._c])

    def __sub__(self, other) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Polynomial._raw([v * f for v in self._c]) if f else Polynomial()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Polynomial._raw([v / f for v in self._c])
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # calculus and evaluation ----------------------------------------------

    def derivative(self) -> Polynomial:
        return Polynomial._raw([i * v for i, v in enumerate(self._c)][1:])

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    def stretch(self, k: int) -> Polynomial:
        """Return ``p(x**k)``."""
        if k < 1:
            raise ValueError("stretch factor must be positive")
        c = [Fraction(0)] * (k * (len(self._c) - 1) + 1) if self._c else []
        for i, v in enumerate(self._c):
            c[k * i] = v
        return Polynomial._raw(c)

    def divexact(self, other: Polynomial) -> Polynomial:
        return poly_divexact(self, other)

    # integrality ----------------------------------------------------------

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._c)

    def integer_coeffs(self, what: str = "polynomial") -> list[int]:
        """Coefficients as ``int``; raises :class:`IntegralityViolation` otherwise."""
        out = []
        for i, v in enumerate(self._c):
            if v.denominator != 1:
                raise IntegralityViolation(f"{what}: coefficient of x^{i} is {v}, not an integer")
            out.append(v.numerator)
        return out


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact product by schoolbook convolution."""
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return Polynomial()
    out = [Fraction(0)] * (len(ac) + len(bc) - 1)
    for i, u in enumerate(ac):
        if not u:
            continue
        for j, v in enumerate(bc):
            out[i + j] += u * v
    return Polynomial._raw(out)


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    if len(rem) <= db:
        return Polynomial(), a
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        q = rem[k] / lead
        quot[k - db] = q
        if q:
            for i, v in enumerate(b.coeffs):
                rem[k - db + i] -= q * v
    return Polynomial._raw(quot), Polynomial._raw(rem[:db])


def poly_divexact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Return ``q`` with ``a == b * q``.

    Raises :class:`NonExactDivision` when ``b`` does not divide ``a``.
    """
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise NonExactDivision(f"({a}) is not divisible by ({b}); remainder {r}")
    return q


def substitute_linear_fraction(p: Polynomial, a: Scalar, b: Scalar, c: Scalar, d: Scalar,
                               m: int) -> Polynomial:
    """Homogenised Moebius substitution.

    Computes ``sum_k p_k (a x + b)^k (c x + d)^(m - k)``, which is
    ``(c x + d)^m * p((a x + b)/(c x + d))`` with the denominators cleared.
    """
    deg = p.degree
    if deg is not None and m < deg:
        raise DegreeExceedsHomogenization(f"homogenisation degree {m} is below deg p = {deg}")
    num = Polynomial([b, a])
    den = Polynomial([d, c])
    num_pows = [Polynomial([1])]
    for _ in range(deg or 0):
        num_pows.append(num_pows[-1] * num)
    den_pows = [Polynomial([1])]
    for _ in range(m):
        den_pows.append(den_pows[-1] * den)
    out = Polynomial()
    for k, coeff in enumerate(p.coeffs):
        if coeff:
            out = out + num_pows[k] * den_pows[m - k] * coeff
    return out
