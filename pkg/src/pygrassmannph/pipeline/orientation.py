"""Orientation propagation across a frame field by the determinant test.

A breadth-first tree from the lowest index of each connected component
fixes the orientation; every graph edge is then verified. An edge whose
determinant is still negative means the sampled surface is not orientable
or the graph connects points farther apart than half the reach.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from ..const import DET_ZERO_TOL
from ..errors import DimensionError, ParameterError
from ..models.frame import FrameField
from ..models.records import EdgeDeterminant, InconsistencyReport
from .neighbors import edge_lengths

_LOGGER = logging.getLogger(__name__)


def orientation_safety_radius(tau: float) -> float:
    """Half the reach: closer points have positively correlated tangent planes."""
    if tau <= 0.0:
        msg = f"Reach estimate must be positive, got {tau}"
        raise ParameterError(msg)
    return tau / 2.0


def edge_determinants(frames: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """det(B_iᵀ B_j) for every edge (i, j)."""
    edges = np.asarray(edges, dtype=np.intp).reshape(-1, 2)
    gram = np.einsum("eak,eal->ekl", frames[edges[:, 0]], frames[edges[:, 1]])
    return np.linalg.det(gram) if edges.shape[0] else np.empty(0)


def _warn_long_edges(field: FrameField, edges: np.ndarray, tau: float) -> None:
    radius = orientation_safety_radius(tau)
    if field.cloud is None:
        _LOGGER.debug("No cloud attached, skipping edge length check against τ/2 = %g", radius)
        return
    lengths = edge_lengths(field.cloud, edges)
    too_long = int(np.count_nonzero(lengths > radius))
    if too_long:
        _LOGGER.warning(
            "%d of %d propagation edges are longer than τ/2 = %g (longest %g)",
            too_long,
            lengths.size,
            radius,
            float(lengths.max()),
        )


def propagate_orientation(
    field: FrameField,
    edges: np.ndarray,
    *,
    tau: float | None = None,
) -> FrameField | InconsistencyReport:
    """Orient every frame consistently with its breadth-first parent.

    A child frame whose determinant against its parent is negative gets its
    last column negated, which reverses its orientation and keeps it
    orthonormal.

    Args:
    ----
        field: FrameField
        edges: (E, 2) undirected edge list
        tau: optional reach estimate; edges longer than τ/2 are logged

    Returns:
    -------
        the oriented FrameField carrying the edges with |det| <= 1e-12, or
        an InconsistencyReport listing all edges with det < -1e-12 after
        propagation

    """
    n = len(field)
    if n == 0:
        msg = "Cannot orient an empty frame field"
        raise ParameterError(msg)
    edges = np.asarray(edges, dtype=np.intp).reshape(-1, 2)
    if edges.size and (edges.min() < 0 or edges.max() >= n):
        msg = f"Edge indices out of range for {n} frames"
        raise DimensionError(msg)
    if tau is not None:
        _warn_long_edges(field, edges, tau)

    adjacency = coo_matrix((np.ones(edges.shape[0]), (edges[:, 0], edges[:, 1])), shape=(n, n)).tocsr()
    n_components, labels = connected_components(adjacency, directed=False)

    frames = field.frames.copy()
    flips = 0
    for component in range(n_components):
        root = int(np.flatnonzero(labels == component)[0])
        order, parents = breadth_first_order(adjacency, root, directed=False, return_predecessors=True)
        for child in order[1:]:
            parent = parents[child]
            if np.linalg.det(frames[parent].T @ frames[child]) < 0.0:
                frames[child, :, -1] *= -1.0
                flips += 1

    dets = edge_determinants(frames, edges)
    violating = np.flatnonzero(dets < -DET_ZERO_TOL)
    undetermined = np.flatnonzero(np.abs(dets) <= DET_ZERO_TOL)
    _LOGGER.debug(
        "Orientation: %d components, %d flips, %d violating and %d indeterminate edges",
        n_components,
        flips,
        violating.size,
        undetermined.size,
    )

    indeterminate = [EdgeDeterminant(int(edges[e, 0]), int(edges[e, 1]), float(dets[e])) for e in undetermined]
    if violating.size:
        return InconsistencyReport(
            violations=[EdgeDeterminant(int(edges[e, 0]), int(edges[e, 1]), float(dets[e])) for e in violating],
            indeterminate=indeterminate,
            flips=flips,
            components=int(n_components),
        )
    if undetermined.size:
        _LOGGER.warning("%d edges have |det| <= %.0e and carry no orientation", undetermined.size, DET_ZERO_TOL)
    return FrameField(
        frames,
        oriented=True,
        provenance=field.provenance,
        cloud=field.cloud,
        indeterminate=tuple(indeterminate),
    )
