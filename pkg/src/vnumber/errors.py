"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class VNumberError(Exception):
    """Base class for all errors raised by :mod:`vnumber`."""


class DimensionMismatchError(VNumberError, ValueError):
    """Two objects live in polynomial rings with different variable counts."""


class UndefinedInputError(VNumberError, ValueError):
    """The operation is undefined for the zero ideal or the unit ideal."""


class InvalidPrimeError(VNumberError, ValueError):
    """A prime passed to a local operation is not associated to the ideal."""


class PreconditionError(VNumberError, ValueError):
    """An input violates a documented precondition."""


class CapExceededError(VNumberError, RuntimeError):
    """An exhaustive search ran past its degree cap without success."""


class CapacityError(VNumberError, RuntimeError):
    """The input is larger than the configured search-size cap."""


class InvariantViolation(VNumberError, AssertionError):
    """An internal consistency check failed (indicates a bug)."""


class ParseError(VNumberError, ValueError):
    """Malformed text input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(VNumberError, ValueError):
    """Well-formed input describing an invalid object (e.g. a loop)."""
