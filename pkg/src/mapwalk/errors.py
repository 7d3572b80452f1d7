"""
Exception hierarchy for mapwalk.

Input problems derive from ``ValueError`` so callers that already catch it keep
working; internal identity failures derive from ``RuntimeError``.
"""

from typing import Optional


class MapwalkError(Exception):
    """Base class for every error raised by mapwalk."""


class MapValidationError(MapwalkError, ValueError):
    """A rotation system, vertex id or family parameter is invalid."""


class RotmapParseError(MapValidationError):
    """Malformed ``.rotmap`` text."""

    def __init__(self, line_number: int, reason: str, line: Optional[str] = None):
        self.line_number = line_number
        self.reason = reason
        self.line = line
        super().__init__(f"line {line_number}: {reason}")


class PreconditionError(MapwalkError, ValueError):
    """An operation was called outside its documented domain."""


class ConsistencyError(MapwalkError, RuntimeError):
    """An identity that must hold exactly was violated.

    This always indicates a bug in mapwalk, never bad input.
    """


class IllConditionedSpectrumError(MapwalkError, ArithmeticError):
    """Floating-point spectral data is too close to call."""

    def __init__(self, message: str, gap: Optional[float] = None):
        self.gap = gap
        super().__init__(message)
