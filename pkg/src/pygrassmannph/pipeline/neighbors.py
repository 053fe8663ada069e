"""Exact k-nearest neighbors and the undirected neighbor graph."""

from __future__ import annotations

import logging

import numpy as np
from scipy.spatial.distance import cdist

from ..errors import InsufficientPointsError, ParameterError
from ..helpers import map_row_blocks
from ..models.cloud import NeighborGraph, PointCloud

_LOGGER = logging.getLogger(__name__)


def default_k(n: int, d: int) -> int:
    """Neighborhood size k = clamp(round(n^{2/(d+2)}), d + 1, n - 1).

    Args:
    ----
        n: number of sample points
        d: intrinsic dimension

    Returns:
    -------
        k

    """
    if n < d + 2:
        msg = f"Need at least d + 2 = {d + 2} points, got {n}"
        raise InsufficientPointsError(msg)
    k = round(n ** (2.0 / (d + 2)))
    return int(min(max(k, d + 1), n - 1))


def knn(cloud: PointCloud, k: int, *, n_threads: int | None = None) -> NeighborGraph:
    """Exact Euclidean k nearest neighbors, ties broken by smaller index.

    Args:
    ----
        cloud: PointCloud
        k: neighbors per point, 1 <= k <= n - 1
        n_threads: worker count for row blocks

    Returns:
    -------
        NeighborGraph

    """
    n = cloud.n
    if not 1 <= k <= n - 1:
        msg = f"k must be in [1, {n - 1}], got {k}"
        raise ParameterError(msg)
    points = cloud.points
    columns = np.arange(n)

    def block(rows: range) -> np.ndarray:
        dist = cdist(points[rows.start : rows.stop], points, "sqeuclidean")
        dist[np.arange(len(rows)), np.arange(rows.start, rows.stop)] = np.inf
        order = np.lexsort((np.broadcast_to(columns, dist.shape), dist), axis=-1)
        return order[:, :k]

    lists = np.vstack(map_row_blocks(block, n, n_threads=n_threads))
    _LOGGER.debug("Computed %d-NN graph on %d points", k, n)
    return NeighborGraph(k=k, lists=lists)


def symmetrize(graph: NeighborGraph) -> np.ndarray:
    """Undirected edges (i, j), i < j, present when either lists the other.

    Returns
    -------
        (E, 2) int array, deduplicated and sorted lexicographically

    """
    rows = np.repeat(np.arange(graph.n), graph.k)
    cols = graph.lists.ravel()
    pairs = np.column_stack((np.minimum(rows, cols), np.maximum(rows, cols)))
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]
    if pairs.shape[0] == 0:
        return np.empty((0, 2), dtype=np.intp)
    return np.unique(pairs, axis=0).astype(np.intp)


def edge_lengths(cloud: PointCloud, edges: np.ndarray) -> np.ndarray:
    """Euclidean length of each edge."""
    edges = np.asarray(edges, dtype=np.intp).reshape(-1, 2)
    return np.linalg.norm(cloud.points[edges[:, 0]] - cloud.points[edges[:, 1]], axis=1)
