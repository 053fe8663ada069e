"""Scale parameter and distance matrix models."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from ..const import SYMMETRY_TOL
from ..errors import MatrixError, ParameterError


class MetricTag(StrEnum):
    """Metric a distance matrix was computed with."""

    EUCLIDEAN = "euclidean"
    GRASSMANN_DC = "grassmann_dc"

    @property
    def code(self) -> int:
        """Byte code used in GPDM files."""
        return 0 if self is MetricTag.EUCLIDEAN else 1

    @classmethod
    def from_code(cls, code: int) -> MetricTag:
        """Return the tag for a GPDM byte code."""
        for tag in cls:
            if tag.code == code:
                return tag
        msg = f"Unknown metric tag code {code}"
        raise ValueError(msg)


class ScaleMode(StrEnum):
    """How c was chosen."""

    AUTO = "auto"
    MANUAL = "manual"


@dataclass(frozen=True)
class ScaleParams:
    """Weight c > 0 of the Grassmannian term, in squared length units."""

    c: float
    mode: ScaleMode = ScaleMode.MANUAL

    def __post_init__(self) -> None:
        """Validate c."""
        if not np.isfinite(self.c) or self.c <= 0.0:
            msg = f"Scale c must be positive, got {self.c}"
            raise ParameterError(msg)


def validate_distance_entries(entries: np.ndarray) -> np.ndarray:
    """Check squareness, symmetry within 1e-12 and nonnegativity.

    Returns
    -------
        the entries as a float64 array

    Raises
    ------
        MatrixError: the matrix is not a valid distance matrix

    """
    entries = np.asarray(entries, dtype=np.float64)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:  # noqa: PLR2004
        msg = f"Distance matrix must be square, got shape {entries.shape}"
        raise MatrixError(msg)
    if not np.all(np.isfinite(entries)):
        msg = "Distance matrix contains NaN or infinite entries"
        raise MatrixError(msg)
    if np.any(entries < 0.0):
        msg = "Distance matrix contains negative entries"
        raise MatrixError(msg)
    asymmetry = float(np.max(np.abs(entries - entries.T), initial=0.0))
    if asymmetry > SYMMETRY_TOL:
        msg = f"Distance matrix is not symmetric (max deviation {asymmetry:.3e})"
        raise MatrixError(msg)
    return entries


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Dense symmetric n×n distance matrix with zero diagonal."""

    entries: np.ndarray
    metric_tag: MetricTag = MetricTag.EUCLIDEAN
    c: float = 0.0

    def __post_init__(self) -> None:
        """Validate entries and force an exactly zero diagonal."""
        entries = validate_distance_entries(self.entries).copy()
        if np.any(np.abs(np.diag(entries)) > SYMMETRY_TOL):
            msg = "Distance matrix diagonal must be zero"
            raise MatrixError(msg)
        np.fill_diagonal(entries, 0.0)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "metric_tag", MetricTag(self.metric_tag))

    @property
    def n(self) -> int:
        """Number of points."""
        return int(self.entries.shape[0])

    def diameter(self) -> float:
        """Largest entry."""
        return float(np.max(self.entries, initial=0.0))
