"""Vietoris-Rips persistence diagrams from a distance matrix."""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np

from ..const import MAX_HOMOLOGY_DIM
from ..errors import ParameterError
from ..helpers import get_thread_count
from ..models.diagram import PersistenceDiagram
from ..models.matrix import DistanceMatrix
from .cohomology import rips_cohomology

_LOGGER = logging.getLogger(__name__)

Engine = Literal["native", "giotto", "auto"]

# engine="auto" hands larger inputs to giotto-ph.
AUTO_NATIVE_MAX_POINTS = 200


def as_distance_matrix(dist: DistanceMatrix | np.ndarray) -> DistanceMatrix:
    """Wrap and validate a raw matrix; MatrixError when it is not a distance matrix."""
    if isinstance(dist, DistanceMatrix):
        return dist
    return DistanceMatrix(np.asarray(dist, dtype=np.float64))


def enclosing_radius(dist: DistanceMatrix | np.ndarray) -> float:
    """min over i of max over j of D_ij; the Rips complex is a cone above it."""
    entries = dist.entries if isinstance(dist, DistanceMatrix) else np.asarray(dist, dtype=np.float64)
    return float(np.min(np.max(entries, axis=1)))


def check_maxdim(maxdim: int) -> None:
    """Reject unsupported homology degrees."""
    if not 0 <= maxdim <= MAX_HOMOLOGY_DIM:
        msg = f"maxdim must be in [0, {MAX_HOMOLOGY_DIM}], got {maxdim}"
        raise ParameterError(msg)


def _giotto_bars(entries: np.ndarray, maxdim: int, threshold: float) -> list[np.ndarray]:
    from gph import ripser_parallel  # noqa: PLC0415

    result = ripser_parallel(
        entries,
        maxdim=maxdim,
        thresh=threshold,
        coeff=2,
        metric="precomputed",
        n_threads=get_thread_count(),
    )
    return [bars[bars[:, 1] > bars[:, 0]] for bars in result["dgms"]]


def vr_persistence(
    dist: DistanceMatrix | np.ndarray,
    maxdim: int = 1,
    threshold: float | None = None,
    *,
    engine: Engine = "native",
) -> list[PersistenceDiagram]:
    """Persistence diagrams of the Rips filtration over Z/2, degrees 0..maxdim.

    Args:
    ----
        dist: DistanceMatrix or a raw symmetric matrix
        maxdim: top homology degree, at most 2
        threshold: largest simplex diameter, defaults to the enclosing radius
        engine: "native", "giotto" (giotto-ph) or "auto" (giotto-ph above
            AUTO_NATIVE_MAX_POINTS points)

    Returns:
    -------
        one PersistenceDiagram per degree, zero-length bars omitted

    Raises:
    ------
        MatrixError: the matrix is not symmetric, nonnegative with zero diagonal

    """
    matrix = as_distance_matrix(dist)
    check_maxdim(maxdim)
    if threshold is None:
        threshold = enclosing_radius(matrix)
    elif threshold < 0.0:
        msg = f"Threshold must be nonnegative, got {threshold}"
        raise ParameterError(msg)

    if engine == "auto":
        engine = "giotto" if matrix.n > AUTO_NATIVE_MAX_POINTS else "native"
    _LOGGER.debug("Rips persistence: n=%d, maxdim=%d, threshold=%g, engine=%s", matrix.n, maxdim, threshold, engine)

    if engine == "giotto":
        bars = _giotto_bars(matrix.entries, maxdim, threshold)
    elif engine == "native":
        bars = [np.array(degree, dtype=np.float64).reshape(-1, 2) for degree in rips_cohomology(matrix.entries, maxdim, threshold)]
    else:
        msg = f"Unknown engine {engine!r}"
        raise ParameterError(msg)
    return [PersistenceDiagram(degree=degree, bars=degree_bars) for degree, degree_bars in enumerate(bars)]


def prominent_bars(diagram: PersistenceDiagram, fraction: float, scale: float) -> np.ndarray:
    """Bars whose persistence is at least fraction·scale; infinite bars count."""
    return diagram.bars[diagram.persistence >= fraction * scale]
