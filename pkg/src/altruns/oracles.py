"""Brute-force permutation statistics.

Two layers live here. :func:`stat_of` evaluates a statistic on a single word
straight from its definition. :func:`oracle_row` enumerates every word of
``S_n`` (or the up-signed words of ``B_n``) and tallies a statistic; it does
the tallying on numpy blocks so ``n = 10`` stays fast, and the tests tie the
two layers together on small ``n``.

Signed words never store the leading ``0``; statistics that need it prepend
it themselves.
"""

from __future__ import annotations

import functools
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BoundExceeded, KindMismatch, UnsupportedIndex

SYMMETRIC_BOUND = 10
SIGNED_BOUND = 7

DISTRIBUTION_STATS = ("alt_runs", "pk", "lpk", "signed_runs_up")
COUNT_STATS = ("snake_count", "zigzag_count")
ROW_STATS = DISTRIBUTION_STATS + COUNT_STATS

_UNSIGNED_STATS = ("alt_runs", "pk", "lpk", "is_zigzag")
_SIGNED_STATS = ("signed_runs", "is_snake")


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{len(self.word)}")


@dataclass(frozen=True)
class SignedPermutation:
    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(v) for v in self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a signed permutation of 1..{len(self.word)}")


@dataclass(frozen=True)
class StatRow:
    """Distribution of a statistic; ``counts[v]`` is the number of words with value ``v``.

    For ``snake_count`` and ``zigzag_count`` the row holds a single total.
    """

    n: int
    statistic: str
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def _direction_changes(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w) - 1) if (w[i - 1] < w[i]) != (w[i] < w[i + 1]))


def _peaks(w: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(w) - 1) if w[i - 1] < w[i] > w[i + 1])


def _alternates(w: Sequence[int], first_up: bool) -> bool:
    up = first_up
    for a, b in zip(w, w[1:]):
        if (a < b) != up:
            return False
        up = not up
    return True


def stat_of(word: Permutation | SignedPermutation, statistic: str) -> int:
    """Value of ``statistic`` on a single word, computed from the definition."""
    if statistic in _UNSIGNED_STATS:
        if not isinstance(word, Permutation):
            raise KindMismatch(f"{statistic} applies to unsigned permutations only")
        w = word.word
        if statistic == "alt_runs":
            return 0 if len(w) <= 1 else 1 + _direction_changes(w)
        if statistic == "pk":
            return _peaks(w)
        if statistic == "lpk":
            return _peaks((0,) + w)
        return int(_alternates(w, first_up=False))
    if statistic in _SIGNED_STATS:
        if not isinstance(word, SignedPermutation):
            raise KindMismatch(f"{statistic} applies to signed permutations only")
        w = (0,) + word.word
        if statistic == "signed_runs":
            return 0 if len(w) <= 1 else 1 + _direction_changes(w)
        return int(_alternates(w, first_up=True))
    raise ValueError(f"unknown statistic {statistic!r}")


# vectorised enumeration -------------------------------------------------------

def permutation_block(n: int, first: int | None = None) -> np.ndarray:
    """All permutations of ``1..n`` in lexicographic order, one per row.

    With ``first`` given, only the block starting with that value. Built
    iteratively: each pass prepends a new leading value to the table of
    permutations of the remaining values.
    """
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    leads = range(n) if first is None else [first - 1]
    return _prepend(_base_table(n - 1), leads) + 1


def _prepend(table: np.ndarray, leads) -> np.ndarray:
    # Each lead followed by the table relabelled to skip that lead.
    parts = []
    for lead in leads:
        rest = table + (table >= lead).astype(np.int8)
        parts.append(np.hstack([np.full((rest.shape[0], 1), lead, dtype=np.int8), rest]))
    return np.vstack(parts)


@functools.lru_cache(maxsize=4)
def _base_table(m: int) -> np.ndarray:
    """Permutations of ``0..m-1`` in lexicographic order (read-only)."""
    table = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, m + 1):
        table = _prepend(table, range(size))
    table.setflags(write=False)
    return table


def _sign_masks(n: int) -> np.ndarray:
    bits = (np.arange(2 ** n)[:, None] >> np.arange(n)[None, :]) & 1
    return (1 - 2 * bits).astype(np.int8)


def _runs(words: np.ndarray) -> np.ndarray:
    up = np.diff(words.astype(np.int16), axis=1) > 0
    return 1 + np.count_nonzero(up[:, 1:] != up[:, :-1], axis=1)


def _peak_counts(words: np.ndarray) -> np.ndarray:
    w = words.astype(np.int16)
    mid = w[:, 1:-1]
    return np.count_nonzero((mid > w[:, :-2]) & (mid > w[:, 2:]), axis=1)


def _alternating_mask(words: np.ndarray, first_up: bool) -> np.ndarray:
    up = np.diff(words.astype(np.int16), axis=1) > 0
    pattern = (np.arange(up.shape[1]) % 2 == 0) == first_up
    return np.all(up == pattern[None, :], axis=1)


def _pad_zero(words: np.ndarray) -> np.ndarray:
    return np.hstack([np.zeros((words.shape[0], 1), dtype=words.dtype), words])


def _tally(values: np.ndarray, length: int) -> list[int]:
    return [int(v) for v in np.bincount(values, minlength=length)[:length]]


def _block_counts(n: int, statistic: str, first: int) -> list[int]:
    """Histogram of ``statistic`` over the words whose first letter is ``first``."""
    perms = permutation_block(n, first)
    if statistic == "alt_runs":
        return _tally(_runs(perms), n) if n >= 2 else [perms.shape[0]]
    if statistic == "pk":
        return _tally(_peak_counts(perms), n)
    if statistic == "lpk":
        return _tally(_peak_counts(_pad_zero(perms)), n + 1)
    if statistic == "zigzag_count":
        return [int(np.count_nonzero(_alternating_mask(perms, first_up=False)))]
    # signed statistics; first letter fixed positive
    masks = _sign_masks(n)
    masks = masks[masks[:, 0] > 0]
    signed = (perms[:, None, :] * masks[None, :, :]).reshape(-1, n)
    padded = _pad_zero(signed)
    if statistic == "signed_runs_up":
        return _tally(_runs(padded), n + 1)
    if statistic == "snake_count":
        return [int(np.count_nonzero(_alternating_mask(padded, first_up=True)))]
    raise ValueError(f"unknown statistic {statistic!r}")


def _trim(counts: list[int]) -> tuple[int, ...]:
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def oracle_row(n: int, statistic: str, *, workers: int = 1,
               symmetric_bound: int = SYMMETRIC_BOUND,
               signed_bound: int = SIGNED_BOUND) -> StatRow:
    """Exhaustive distribution of ``statistic`` over ``S_n`` or up-signed ``B_n``.

    The search space is split by first letter; with ``workers > 1`` the blocks
    run in a process pool. Blocks are merged in first-letter order, so the
    result does not depend on ``workers``.
    """
    if statistic not in ROW_STATS:
        raise ValueError(f"unknown statistic {statistic!r}; expected one of {ROW_STATS}")
    signed = statistic in ("signed_runs_up", "snake_count")
    limit = signed_bound if signed else symmetric_bound
    if n > limit:
        name = "SIGNED_BOUND" if signed else "SYMMETRIC_BOUND"
        raise BoundExceeded(f"{statistic} oracle limited to n <= {limit}", name, limit)
    if n < 0:
        raise UnsupportedIndex("n must be non-negative")
    if n == 0:
        if statistic in COUNT_STATS:
            return StatRow(0, statistic, (1,))
        raise UnsupportedIndex(f"{statistic} needs n >= 1")
    if n == 1 and statistic == "zigzag_count":
        return StatRow(1, statistic, (1,))

    firsts = range(1, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_block_counts, [n] * n, [statistic] * n, firsts))
    else:
        blocks = [_block_counts(n, statistic, f) for f in firsts]
    width = max(len(b) for b in blocks)
    counts = [0] * width
    for b in blocks:
        for i, v in enumerate(b):
            counts[i] += v
    if statistic in COUNT_STATS:
        return StatRow(n, statistic, (sum(counts),))
    return StatRow(n, statistic, _trim(counts))


def words(n: int) -> list[Permutation]:
    """All of ``S_n`` as :class:`Permutation` objects (small ``n`` only)."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def signed_words(n: int) -> list[SignedPermutation]:
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * v for s, v in zip(signs, p))))
    return out


def expected_total(n: int, statistic: str) -> int:
    if statistic == "signed_runs_up":
        return 2 ** (n - 1) * math.factorial(n)
    return math.factorial(n)
