"""Local PCA tangent frames and their convergence rate."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from ..const import EIGEN_DEGENERATE_TOL
from ..errors import DataError, DegenerateNeighborhoodError, DimensionError
from ..geometry.grassmann import grassmann_distance_stack
from ..helpers import map_row_blocks
from ..models.frame import Frame, FrameField, Provenance

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ..models.cloud import NeighborGraph, PointCloud

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class RateFit:
    """Least-squares slope of log(error) against log(n)."""

    slope: float
    intercept: float
    theoretical_slope: float


def _sign_convention(vectors: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude entry of each column positive, ties to lower index."""
    pivots = np.argmax(np.abs(vectors), axis=-2)
    picked = np.take_along_axis(vectors, pivots[..., np.newaxis, :], axis=-2)
    return vectors * np.where(picked < 0.0, -1.0, 1.0)


def _pca_frames(neighborhoods: np.ndarray, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Top-d covariance eigenvectors for a stack of (m, D) neighborhoods.

    Returns
    -------
        (frames of shape (b, D, d), d-th largest eigenvalue per neighborhood)

    """
    centered = neighborhoods - neighborhoods.mean(axis=-2, keepdims=True)
    covariance = np.einsum("...ma,...mb->...ab", centered, centered) / neighborhoods.shape[-2]
    eigenvalues, eigenvectors = np.linalg.eigh(covariance)
    top = eigenvectors[..., :, ::-1][..., :, :d]
    return _sign_convention(top), eigenvalues[..., ::-1][..., d - 1]


def local_pca_frame(cloud: PointCloud, center: int, neighbors: Sequence[int] | np.ndarray, d: int) -> Frame:
    """Tangent frame at center from the PCA of {center} ∪ neighbors.

    Args:
    ----
        cloud: PointCloud
        center: index of the base point
        neighbors: indices of its neighbors
        d: plane dimension

    Returns:
    -------
        Frame whose columns are the top-d principal directions, largest first

    Raises:
    ------
        DegenerateNeighborhoodError: the d-th eigenvalue is at most 1e-14

    """
    if not 1 <= d <= cloud.ambient_dim:
        msg = f"Plane dimension {d} not in [1, {cloud.ambient_dim}]"
        raise DimensionError(msg)
    indices = np.asarray(neighbors, dtype=np.intp)
    indices = np.concatenate(([center], indices[indices != center]))
    frames, lambda_d = _pca_frames(cloud.points[indices], d)
    if lambda_d <= EIGEN_DEGENERATE_TOL:
        msg = f"Neighborhood of point {center} is degenerate (λ_d = {lambda_d:.3e})"
        raise DegenerateNeighborhoodError(msg, index=center)
    return Frame(frames)


def estimate_frame_field(cloud: PointCloud, graph: NeighborGraph, *, n_threads: int | None = None) -> FrameField:
    """Local PCA frame at every point over {i} ∪ lists[i].

    Returns
    -------
        unoriented FrameField with estimated provenance

    """
    if graph.n != cloud.n:
        msg = f"Graph has {graph.n} points, cloud has {cloud.n}"
        raise DimensionError(msg)
    d = cloud.intrinsic_dim
    neighborhoods = np.column_stack((np.arange(cloud.n), graph.lists))

    def block(rows: range) -> np.ndarray:
        frames, lambda_d = _pca_frames(cloud.points[neighborhoods[rows.start : rows.stop]], d)
        bad = np.flatnonzero(lambda_d <= EIGEN_DEGENERATE_TOL)
        if bad.size:
            index = rows.start + int(bad[0])
            msg = f"Neighborhood of point {index} is degenerate (λ_d = {lambda_d[bad[0]]:.3e})"
            raise DegenerateNeighborhoodError(msg, index=index)
        return frames

    frames = np.concatenate(map_row_blocks(block, cloud.n, n_threads=n_threads))
    _LOGGER.debug("Estimated %d tangent frames (D=%d, d=%d, k=%d)", cloud.n, cloud.ambient_dim, d, graph.k)
    return FrameField(frames, oriented=False, provenance=Provenance.ESTIMATED, cloud=cloud)


def mean_frame_error(estimated: FrameField, reference: FrameField) -> float:
    """Mean unoriented Grassmannian distance between corresponding frames."""
    if estimated.frames.shape != reference.frames.shape:
        msg = f"Frame stacks {estimated.frames.shape} and {reference.frames.shape} differ"
        raise DimensionError(msg)
    return float(np.mean(grassmann_distance_stack(estimated.frames, reference.frames)))


def rate_check(errors_by_n: Sequence[tuple[int, float]], d: int) -> RateFit:
    """Fit log(error) = slope·log(n) + intercept.

    Args:
    ----
        errors_by_n: (sample size, mean frame error) pairs
        d: intrinsic dimension, for the reference slope -3/(2(d+2))

    Returns:
    -------
        RateFit

    """
    if len(errors_by_n) < 3:  # noqa: PLR2004
        msg = f"Need at least 3 sample sizes, got {len(errors_by_n)}"
        raise DataError(msg)
    sizes = np.array([n for n, _ in errors_by_n], dtype=np.float64)
    errors = np.array([e for _, e in errors_by_n], dtype=np.float64)
    if np.any(errors <= 0.0) or np.any(sizes <= 0.0):
        msg = "Errors and sample sizes must be positive"
        raise DataError(msg)
    slope, intercept = np.polyfit(np.log(sizes), np.log(errors), 1)
    return RateFit(slope=float(slope), intercept=float(intercept), theoretical_slope=-3.0 / (2.0 * (d + 2)))
