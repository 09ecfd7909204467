"""Number triangles: binomials, Stirling numbers of the second kind, and the
central factorial numbers ``U(n, k)`` (even indices) and ``V(n, k)`` (odd
indices), each with an independent cross-check.

``U`` and ``V`` are available from their three-term recurrences and from their
explicit alternating sums. The set-partition oracles count the combinatorial
objects directly and are kept deliberately naive.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .algebra import Polynomial
from .errors import BoundExceeded, IntegralityViolation, UnsupportedIndex
from .report import VerificationReport, Witness

U_ORACLE_BOUND = 5
V_ORACLE_BOUND = 4


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


class _RowLadder:
    """Rows ``row(start), row(start + 1), ...`` grown on demand.

    Filling happens under a lock, so concurrent first access simply waits for
    the same deterministic rows.
    """

    def __init__(self, first: list[int], step: Callable[[int, list[int]], list[int]], start: int):
        self._rows = [first]
        self._step = step
        self._start = start
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        i = n - self._start
        if i < 0:
            raise UnsupportedIndex(f"row {n} precedes the first row {self._start}")
        if i >= len(self._rows):
            with self._lock:
                while i >= len(self._rows):
                    m = self._start + len(self._rows)
                    self._rows.append(self._step(m, self._rows[-1]))
        return self._rows[i]


def _stirling2_step(n: int, prev: list[int]) -> list[int]:
    # prev is row n-1 indexed k = 0..n-1
    return [(prev[k - 1] if k >= 1 else 0) + (k * prev[k] if k < len(prev) else 0)
            for k in range(n + 1)]


def _u_step(n: int, prev: list[int]) -> list[int]:
    return [(prev[k - 1] if k >= 1 else 0) + (k * k * prev[k] if k < len(prev) else 0)
            for k in range(n + 1)]


def _v_step(n: int, prev: list[int]) -> list[int]:
    return [(prev[k - 1] if k >= 1 else 0) + ((2 * k + 1) ** 2 * prev[k] if k < len(prev) else 0)
            for k in range(n + 1)]


# All three ladders store row n indexed by k = 0..n.
_STIRLING2 = _RowLadder([1], _stirling2_step, 0)
_U = _RowLadder([1], _u_step, 0)
_V = _RowLadder([1], _v_step, 0)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an ``n``-set into ``k`` nonempty blocks."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _STIRLING2.row(n)[k]


def u_row(n: int) -> list[int]:
    """``[U(n, 0), ..., U(n, n)]`` by recurrence (``U(0, 0) = 1``)."""
    if n < 0:
        raise UnsupportedIndex(f"U row index {n} is negative")
    return list(_U.row(n))


def v_row(n: int) -> list[int]:
    """``[V(n, 0), ..., V(n, n)]`` by recurrence."""
    if n < 0:
        raise UnsupportedIndex(f"V row index {n} is negative")
    return list(_V.row(n))


def _require_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityViolation(f"{what} evaluated to {value}, not an integer")
    return value.numerator


def u_explicit(n: int, k: int) -> int:
    total = sum((-1) ** i * binomial(2 * k, i) * (k - i) ** (2 * n) for i in range(2 * k + 1))
    return _require_integer(Fraction(total, math.factorial(2 * k)), f"U({n},{k})")


def v_explicit(n: int, k: int) -> int:
    total = sum(Fraction((-1) ** (k - m) * (2 * m + 1) ** (2 * n + 1), k + m + 1) * binomial(2 * k, k + m)
                for m in range(k + 1))
    return _require_integer(total / (math.factorial(2 * k) * 4 ** k), f"V({n},{k})")


def u_number(n: int, k: int, method: str = "recurrence") -> int:
    """Central factorial number ``U(n, k) = T(2n, 2k)``."""
    if n < 0 or k < 0:
        return 0
    if method == "recurrence":
        return _U.row(n)[k] if k <= n else 0
    if method == "explicit":
        return u_explicit(n, k)
    raise ValueError(f"unknown method {method!r}")


def v_number(n: int, k: int, method: str = "recurrence") -> int:
    """Central factorial number ``V(n, k) = 4^(n-k) T(2n+1, 2k+1)``."""
    if n < 0 or k < 0:
        return 0
    if method == "recurrence":
        return _V.row(n)[k] if k <= n else 0
    if method == "explicit":
        return v_explicit(n, k)
    raise ValueError(f"unknown method {method!r}")


def _expansion(exponents: tuple[int, int]) -> list[int]:
    a, b = exponents
    p = Polynomial([1, 1]) ** a * Polynomial([1, -1]) ** b
    return p.integer_coeffs()


def m_coefficients(n: int, j: int) -> list[int]:
    """Coefficients of ``(1 + x)^(n-2) (1 - x)^(n-j)``, lowest degree first."""
    if n < 2:
        raise UnsupportedIndex(f"M(n, j, .) needs n >= 2, got n={n}")
    if not 1 <= j <= n:
        raise UnsupportedIndex(f"M(n, j, .) needs 1 <= j <= n, got j={j}")
    return _expansion((n - 2, n - j))


def n_coefficients(n: int, j: int) -> list[int]:
    """Coefficients of ``(1 + x)^(n-1) (1 - x)^(n-j)``, lowest degree first."""
    if n < 1 or not 1 <= j <= n:
        raise UnsupportedIndex(f"N(n, j, .) needs 1 <= j <= n, got n={n}, j={j}")
    return _expansion((n - 1, n - j))


def mn_coefficients(n: int, j: int) -> tuple[list[int], list[int]]:
    return m_coefficients(n, j), n_coefficients(n, j)


def u_basis_identity(n: int) -> VerificationReport:
    """Check ``x^n == sum_k U(n, k) prod_{i=1..k} (x - (i-1)^2)``."""
    x = Polynomial.x()
    rhs = Polynomial()
    falling = Polynomial([1])
    for k in range(1, n + 1):
        falling = falling * (x - (k - 1) ** 2)
        rhs = rhs + falling * u_number(n, k)
    lhs = x ** n
    if lhs == rhs:
        return VerificationReport.passed("U_BASIS", n, n)
    return VerificationReport.failed("U_BASIS", n, n, Witness(n, "x^n", lhs, rhs))


# set-partition oracles -------------------------------------------------------

def set_partitions(m: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``m`` (block label of each element)."""
    if m == 0:
        yield []
        return
    rgs = [0] * m
    maxes = [0] + [1] * (m - 1)  # largest label allowed at each position
    while True:
        yield list(rgs)
        i = m - 1
        while i > 0 and rgs[i] == maxes[i]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for t in range(i + 1, m):
            rgs[t] = 0
            maxes[t] = max(maxes[t - 1], rgs[t - 1] + 1)


def _is_pair_anchored(blocks: list[list[int]]) -> bool:
    for block in blocks:
        least = min(abs(e) for e in block)
        if least not in block or -least not in block:
            return False
    return True


def cf_partition_oracle(kind: str, n: int, bound: int | None = None) -> list[int]:
    """Brute-force central factorial row by enumerating set partitions.

    ``kind="U"``: partitions of ``{+-1, ..., +-n}`` in which every block contains
    both ``i`` and ``-i`` for its least absolute value ``i``; returns counts for
    ``k = 1..n`` blocks.

    ``kind="V"``: partitions of ``[2n+1]`` into blocks of odd size; returns
    counts for ``2k+1`` blocks, ``k = 0..n``.
    """
    if kind == "U":
        limit = U_ORACLE_BOUND if bound is None else bound
        if n > limit:
            raise BoundExceeded(f"U partition oracle limited to n <= {limit}", "U_ORACLE_BOUND", limit)
        if n < 1:
            raise UnsupportedIndex("U partition oracle needs n >= 1")
        ground = [s * i for i in range(1, n + 1) for s in (1, -1)]
        counts = [0] * (n + 1)
        for rgs in set_partitions(len(ground)):
            blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1)]
            for e, b in zip(ground, rgs):
                blocks[b].append(e)
            if _is_pair_anchored(blocks):
                counts[len(blocks)] += 1
        return counts[1:]
    if kind == "V":
        limit = V_ORACLE_BOUND if bound is None else bound
        if n > limit:
            raise BoundExceeded(f"V partition oracle limited to n <= {limit}", "V_ORACLE_BOUND", limit)
        if n < 0:
            raise UnsupportedIndex("V partition oracle needs n >= 0")
        size = 2 * n + 1
        counts = [0] * (n + 1)
        for rgs in set_partitions(size):
            sizes = [0] * (max(rgs) + 1)
            for b in rgs:
                sizes[b] += 1
            if all(s % 2 for s in sizes):
                counts[(len(sizes) - 1) // 2] += 1
        return counts
    raise ValueError(f"unknown oracle kind {kind!r}")


# triangle export ---------------------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    """Ragged integer table; ``rows[i][j]`` is entry ``(row_start + i, col_start + j)``."""

    name: str
    rows: tuple[tuple[int, ...], ...]
    row_start: int
    col_start: int

    def entry(self, n: int, k: int) -> int:
        i, j = n - self.row_start, k - self.col_start
        if 0 <= i < len(self.rows) and 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return 0

    def flatten(self) -> list[int]:
        return [v for row in self.rows for v in row]


def triangle(name: str, rows: int) -> Triangle:
    """First ``rows`` rows of a named triangle.

    ``U``: n >= 1, k = 1..n. ``V``: n >= 0, k = 0..n. ``S2``: n >= 1, k = 1..n.
    ``R``: alternating runs, n >= 2, k = 1..n-1.
    """
    if rows < 0:
        raise UnsupportedIndex("row count must be non-negative")
    if name == "U":
        body = [tuple(u_row(n)[1:]) for n in range(1, rows + 1)]
        return Triangle("U", tuple(body), 1, 1)
    if name == "V":
        body = [tuple(v_row(n)) for n in range(rows)]
        return Triangle("V", tuple(body), 0, 0)
    if name == "S2":
        body = [tuple(stirling2(n, k) for k in range(1, n + 1)) for n in range(1, rows + 1)]
        return Triangle("S2", tuple(body), 1, 1)
    if name == "R":
        from .families import family_poly

        body = []
        for n in range(2, rows + 2):
            coeffs = family_poly("R", n).integer_coeffs()
            body.append(tuple(coeffs[1:n]))
        return Triangle("R", tuple(body), 2, 1)
    raise ValueError(f"unknown triangle {name!r}")
