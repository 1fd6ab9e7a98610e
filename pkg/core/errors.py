"""
Error hierarchy

Every error raised by the library derives from DiameterError, so callers
(CLI, harness) can catch one type and map it to an exit code.
"""
from typing import Optional


class DiameterError(Exception):
    """Base class for all library errors."""


class EmptyInputError(DiameterError):
    """Operation needs at least one point."""


class TooFewPointsError(DiameterError):
    """Diameter query on fewer than two points."""

    def __init__(self, count: int):
        super().__init__(f"Diameter needs at least 2 points, got {count}")
        self.count = count


class NonFiniteInputError(DiameterError):
    """A coordinate is NaN or infinite."""

    def __init__(self, index: int, x: float, y: float, where: str = ""):
        location = f" ({where})" if where else ""
        super().__init__(f"Point {index} is not finite: ({x!r}, {y!r}){location}")
        self.index = index


class BadParameterError(DiameterError, ValueError):
    """Invalid generator, benchmark or CLI parameter."""


class PointParseError(DiameterError, ValueError):
    """Malformed point file. Carries the csv line or the bin byte offset."""

    def __init__(self, message: str, *, line: Optional[int] = None, offset: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        elif offset is not None:
            message = f"offset {offset}: {message}"
        super().__init__(message)
        self.line = line
        self.offset = offset


class BadMagicError(PointParseError):
    """Binary point file does not start with the MXD2 magic."""


class PointIOError(DiameterError, OSError):
    """Reading or writing a point file failed at the OS level."""
