"""Exception types raised across the package."""


class AltrunsError(Exception):
    """Base class for every error raised by this package."""


class NonExactDivision(AltrunsError, ArithmeticError):
    pass


class DegreeExceedsHomogenization(AltrunsError, ValueError):
    pass


class NonUnitDenominator(AltrunsError, ZeroDivisionError):
    pass


class NonzeroInnerConstant(AltrunsError, ValueError):
    pass


class OrderMismatch(AltrunsError, ValueError):
    """Two truncated series of different order were combined."""


class IntegralityViolation(AltrunsError, ArithmeticError):
    """A quantity that must be an integer came out fractional."""


class UnsupportedIndex(AltrunsError, ValueError):
    pass


class BoundExceeded(AltrunsError, ValueError):
    """A brute-force or truncation bound was exceeded.

    ``bound`` names the limit and ``limit`` holds its value so the CLI can
    report it.
    """

    def __init__(self, message: str, bound: str = "", limit: int | None = None):
        super().__init__(message)
        self.bound = bound
        self.limit = limit


class KindMismatch(AltrunsError, TypeError):
    """A statistic was applied to the wrong kind of word."""
