"""Brute-force Rips persistence by standard boundary matrix reduction."""

from __future__ import annotations

import itertools
import logging

import numpy as np

from ..const import ORACLE_MAX_POINTS
from ..errors import ParameterError, SizeError
from ..models.diagram import PersistenceDiagram
from ..models.matrix import DistanceMatrix
from .rips import as_distance_matrix, check_maxdim

_LOGGER = logging.getLogger(__name__)


def _filtration(entries: np.ndarray, maxdim: int, threshold: float | None) -> list[tuple[float, int, tuple[int, ...]]]:
    n = entries.shape[0]
    simplices = []
    for size in range(1, maxdim + 3):
        for verts in itertools.combinations(range(n), size):
            value = max((entries[a, b] for a, b in itertools.combinations(verts, 2)), default=0.0)
            if threshold is None or value <= threshold:
                simplices.append((float(value), size - 1, verts[::-1]))
    simplices.sort()
    return simplices


def brute_force_persistence(
    dist: DistanceMatrix | np.ndarray,
    maxdim: int = 1,
    threshold: float | None = None,
) -> list[PersistenceDiagram]:
    """Persistence diagrams from the full boundary matrix, no optimizations.

    Simplices up to dimension maxdim + 1 are ordered by (value, dimension,
    vertex tuple) and reduced left to right.

    Raises
    ------
        SizeError: more than 40 points

    """
    matrix = as_distance_matrix(dist)
    check_maxdim(maxdim)
    if matrix.n > ORACLE_MAX_POINTS:
        msg = f"Brute-force persistence is limited to {ORACLE_MAX_POINTS} points, got {matrix.n}"
        raise SizeError(msg)
    if threshold is not None and threshold < 0.0:
        msg = f"Threshold must be nonnegative, got {threshold}"
        raise ParameterError(msg)

    simplices = _filtration(matrix.entries, maxdim, threshold)
    position = {verts: row for row, (_, _, verts) in enumerate(simplices)}
    reduced: list[set[int]] = []
    low_owner: dict[int, int] = {}
    for _, dim, verts in simplices:
        column = {position[face] for face in itertools.combinations(verts, dim)} if dim else set()
        while column:
            low = max(column)
            if low not in low_owner:
                break
            column ^= reduced[low_owner[low]]
        if column:
            low_owner[max(column)] = len(reduced)
        reduced.append(column)

    bars: list[list[tuple[float, float]]] = [[] for _ in range(maxdim + 1)]
    paired = set(low_owner)
    for low, col in low_owner.items():
        birth, dim = simplices[low][0], simplices[low][1]
        death = simplices[col][0]
        paired.add(col)
        if death > birth:
            bars[dim].append((birth, death))
    for row, (value, dim, _) in enumerate(simplices):
        if row not in paired and dim <= maxdim:
            bars[dim].append((value, np.inf))
    _LOGGER.debug("Brute-force reduction over %d simplices", len(simplices))
    return [PersistenceDiagram(degree=degree, bars=degree_bars) for degree, degree_bars in enumerate(bars)]
