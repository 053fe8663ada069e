"""Exceptions for pygrassmannph."""

from __future__ import annotations


class GrassmannPHError(Exception):
    """Generic pygrassmannph exception."""


class DimensionError(GrassmannPHError):
    """Frames or points with incompatible dimensions."""


class ParameterError(GrassmannPHError):
    """A parameter is outside its admissible range."""


class InsufficientPointsError(ParameterError):
    """Too few points for the requested operation."""


class DegenerateNeighborhoodError(GrassmannPHError):
    """Local PCA neighborhood has no well-defined tangent plane."""

    def __init__(self, msg: str, index: int | None = None) -> None:
        """Initialize with the offending point index."""
        super().__init__(msg)
        self.index = index


class DataError(GrassmannPHError):
    """Input data cannot be used for the requested fit."""


class DegenerateCloudError(GrassmannPHError):
    """All points of the cloud coincide."""


class PreconditionError(GrassmannPHError):
    """An operation was called on input in the wrong state."""


class MatrixError(GrassmannPHError):
    """A distance matrix is not symmetric, nonnegative, or square."""


class SizeError(GrassmannPHError):
    """Input is too large for the requested algorithm."""


class NumericsError(GrassmannPHError):
    """A numerical procedure did not converge."""


class InconsistentOrientationError(GrassmannPHError):
    """Orientation propagation left edges with a negative determinant."""

    def __init__(self, msg: str, violations: int = 0) -> None:
        """Initialize with the number of violating edges."""
        super().__init__(msg)
        self.violations = violations


class InputFileError(GrassmannPHError):
    """A file could not be read or written."""

    def __init__(self, msg: str, path: str | None = None) -> None:
        """Initialize with the file path."""
        super().__init__(msg)
        self.path = path


class ParseError(InputFileError):
    """A file could not be parsed."""

    def __init__(self, msg: str, path: str | None = None, line: int | None = None) -> None:
        """Initialize with the file path and 1-based line number."""
        super().__init__(msg, path)
        self.line = line


class IntegrationWarning(UserWarning):
    """An integrated trajectory left its invariant domain."""
