"""Shared exception types.

UNSUPPORTED is a first-class outcome of the decision procedures, not a bug:
it means the input fell outside the implemented scope and no claim is made
either way.  It is modelled as an exception so that it propagates through
nested calls (factorization inside a solver inside an algorithm) without
being mistaken for a certified negative answer.
"""


class DaerealizeError(Exception):
    """Base class for all package errors."""


class UnsupportedError(DaerealizeError):
    """The input is outside the implemented decision scope.

    ``reason`` is a short human-readable sentence.  ``payload`` optionally
    carries partial structured results, e.g. a square-free decomposition
    when full factorization is not available.
    """

    def __init__(self, reason: str, payload=None):
        super().__init__(reason)
        self.reason = reason
        self.payload = payload


class PoleError(DaerealizeError):
    """An exact substitution produced a zero denominator."""


class ExactDivisionError(DaerealizeError):
    """A division that was required to be exact left a remainder."""


class ParseError(DaerealizeError):
    """Input text violates the expression grammar.

    ``pos`` is a 0-based character offset into the offending text.
    """

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos
