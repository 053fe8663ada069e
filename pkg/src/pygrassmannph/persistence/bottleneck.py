"""Exact bottleneck distance between persistence diagrams."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..errors import ParameterError
from ..models.diagram import PersistenceDiagram

if TYPE_CHECKING:
    from collections.abc import Sequence

_LOGGER = logging.getLogger(__name__)


def _linf(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.maximum(np.abs(a[:, None, 0] - b[None, :, 0]), np.abs(a[:, None, 1] - b[None, :, 1]))


def _has_perfect_matching(cross: np.ndarray, diag_a: np.ndarray, diag_b: np.ndarray, eps: float) -> bool:
    """Whether every point can be matched within eps.

    Rows are the points of A followed by diagonal copies of B's points;
    columns are the points of B followed by diagonal copies of A's points.
    """
    m, k = cross.shape
    adjacency = np.zeros((m + k, k + m), dtype=bool)
    adjacency[:m, :k] = cross <= eps
    adjacency[np.arange(m), k + np.arange(m)] = diag_a <= eps
    adjacency[m + np.arange(k), np.arange(k)] = diag_b <= eps
    adjacency[m:, k:] = True
    matching = maximum_bipartite_matching(csr_matrix(adjacency), perm_type="column")
    return bool(np.all(matching >= 0))


def _finite_bottleneck(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape[0] + b.shape[0] == 0:
        return 0.0
    cross = _linf(a, b)
    diag_a = (a[:, 1] - a[:, 0]) / 2.0
    diag_b = (b[:, 1] - b[:, 0]) / 2.0
    candidates = np.unique(np.concatenate((cross.ravel(), diag_a, diag_b, [0.0])))
    lo, hi = 0, candidates.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _has_perfect_matching(cross, diag_a, diag_b, float(candidates[mid])):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


def bottleneck_distance(first: PersistenceDiagram, second: PersistenceDiagram) -> float:
    """Bottleneck distance, points may be matched to the diagonal.

    Infinite bars are matched among themselves by sorted birth; different
    counts give an infinite distance.

    Returns
    -------
        the smallest ε admitting a matching with all ℓ∞ costs at most ε

    """
    if first.degree != second.degree:
        msg = f"Cannot compare degree {first.degree} with degree {second.degree}"
        raise ParameterError(msg)
    inf_a, inf_b = np.sort(first.infinite[:, 0]), np.sort(second.infinite[:, 0])
    if inf_a.size != inf_b.size:
        return float("inf")
    essential = float(np.max(np.abs(inf_a - inf_b), initial=0.0))
    finite = _finite_bottleneck(first.finite, second.finite)
    _LOGGER.debug("Bottleneck H%d: finite %g, essential %g", first.degree, finite, essential)
    return max(finite, essential)


def bottleneck_by_degree(
    first: Sequence[PersistenceDiagram],
    second: Sequence[PersistenceDiagram],
) -> dict[int, float]:
    """Bottleneck distance per degree present in either list; missing degrees are empty."""
    by_degree_a = {dg.degree: dg for dg in first}
    by_degree_b = {dg.degree: dg for dg in second}
    distances = {}
    for degree in sorted(by_degree_a.keys() | by_degree_b.keys()):
        empty = PersistenceDiagram(degree=degree, bars=np.empty((0, 2)))
        distances[degree] = bottleneck_distance(by_degree_a.get(degree, empty), by_degree_b.get(degree, empty))
    return distances
