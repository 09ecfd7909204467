"""Verification reports shared by the identity and generating-function suites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable


@dataclass(frozen=True)
class Witness:
    """First failure: the index, which equation, and both sides as computed."""

    index: int
    equation: str
    lhs: Any
    rhs: Any

    def describe(self) -> str:
        return f"n={self.index} [{self.equation}]: lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    lo: int
    hi: int
    witness: Witness | None = None

    @classmethod
    def passed(cls, identity: str, lo: int, hi: int) -> VerificationReport:
        return cls(identity, lo, hi, None)

    @classmethod
    def failed(cls, identity: str, lo: int, hi: int, witness: Witness) -> VerificationReport:
        return cls(identity, lo, hi, witness)

    @property
    def ok(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def line(self, label: str = "n") -> str:
        span = f"{label}={self.lo}" if self.lo == self.hi else f"{label}={self.lo}..{self.hi}"
        text = f"{self.identity} {span} {'PASS' if self.ok else 'FAIL'}"
        if self.witness is not None:
            text += f" {self.witness.describe()}"
        return text


def merge(identity: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    """Fold per-index reports into one report over their combined range.

    The witness is the failure with the smallest index.
    """
    reports = sorted(reports, key=lambda r: r.lo)
    if not reports:
        raise ValueError("nothing to merge")
    lo, hi = reports[0].lo, max(r.hi for r in reports)
    for r in reports:
        if r.witness is not None:
            return VerificationReport.failed(identity, lo, hi, r.witness)
    return VerificationReport.passed(identity, lo, hi)
