"""Exception types raised across the package."""

from __future__ import annotations


class ZBetaError(Exception):
    """Base class for all errors raised by zbeta."""


class LabelError(ZBetaError, ValueError):
    """A register label is missing, duplicated, or otherwise misused."""


class DivisionByZero(ZBetaError, ZeroDivisionError):
    """Division by the zero rational function."""


class SingularSwap(ZBetaError, ZeroDivisionError):
    """``sw`` was asked to divide by ``1 + alpha`` where ``alpha == -1``."""


class ParseError(ZBetaError, SyntaxError):
    """Malformed expression or PD text.

    ``pos`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.msg = message
        self.text = text
        self.pos = pos

    def __str__(self) -> str:
        return f"{self.msg} at position {self.pos}: {self.text!r}"


class ValidationError(ZBetaError, ValueError):
    """A PD code is syntactically fine but not a valid closed diagram."""


class OrientationError(ZBetaError, ValueError):
    """The over-strand direction of a crossing can not be determined."""


class MultiComponentError(ZBetaError, ValueError):
    """A single-variable knot routine was handed a link."""


class NonMonomialDenominator(ZBetaError, ValueError):
    """A corner element that should be a Laurent polynomial is not."""
