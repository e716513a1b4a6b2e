"""Exceptions raised by the library."""


class SPRError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(SPRError, ValueError):
    pass


class DegreeMismatch(SPRError, ValueError):
    pass


class DimensionMismatch(SPRError, ValueError):
    pass


class Unbounded(SPRError, ArithmeticError):
    """The ratio being minimized tends to minus infinity."""


class NotApplicable(SPRError, ValueError):
    pass


class SegmentUnstable(SPRError):
    """Some member of the segment is not Hurwitz, so no common SPR numerator exists."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class IterationLimit(SPRError, RuntimeError):
    def __init__(self, message, best_margin=None, iterations=None):
        super().__init__(message)
        self.best_margin = best_margin
        self.iterations = iterations


class NoEpsilonFound(SPRError, RuntimeError):
    pass


class NoDeltaFound(SPRError, RuntimeError):
    pass


class DegreeDrop(UserWarning):
    """The bilinear image lost degree because z = -1 is a root."""
