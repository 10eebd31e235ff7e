"""Exception types.

Hypothesis violations get one subclass per violated bound so callers can
distinguish them; they never masquerade as false verdicts.
"""

from __future__ import annotations


class IdealDepError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(IdealDepError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}" if line else message)


class PreconditionError(IdealDepError):
    """An operation was called outside its documented domain."""


class InternalCheckError(IdealDepError):
    """A built-in consistency assertion failed (an engine bug, not user error)."""


class HypothesisError(IdealDepError):
    """A checker hypothesis on the input pair is violated."""

    code = "hypothesis"


class RingDimensionTooSmall(HypothesisError):
    code = "ring-dimension"


class ZeroIdealGiven(HypothesisError):
    code = "zero-ideal"


class HeightOutOfRange(HypothesisError):
    code = "height"


class ContainmentFailed(HypothesisError):
    code = "containment"


class DomainAssertionMissing(HypothesisError):
    code = "domain-assertion"


class NotEquigenerated(HypothesisError):
    code = "not-equigenerated"
