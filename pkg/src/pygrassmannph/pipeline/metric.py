"""The d_c distance and scale selection."""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial.distance import cdist

from ..errors import DegenerateCloudError, DimensionError, InsufficientPointsError, ParameterError, PreconditionError
from ..geometry.grassmann import as_columns, oriented_distance_stack
from ..helpers import map_row_blocks
from ..models.matrix import DistanceMatrix, MetricTag, ScaleMode, ScaleParams

if TYPE_CHECKING:
    from ..models.cloud import PointCloud
    from ..models.frame import Frame, FrameField

_LOGGER = logging.getLogger(__name__)


def diameter(cloud: PointCloud, *, n_threads: int | None = None) -> float:
    """Largest pairwise Euclidean distance, computed exactly."""
    points = cloud.points

    def block(rows: range) -> float:
        return float(np.max(cdist(points[rows.start : rows.stop], points, "sqeuclidean")))

    return math.sqrt(max(map_row_blocks(block, cloud.n, n_threads=n_threads)))


def grassmann_diameter(d: int, D: int) -> float:
    """Diameter of Gr⁺(D, d): max(π, (π/2)·√min(d, D - d))."""
    return max(math.pi, (math.pi / 2.0) * math.sqrt(min(d, D - d)))


def choose_scale(cloud: PointCloud) -> ScaleParams:
    """Pick c so that the diameters of the sample and of c·Gr⁺ coincide.

    Returns
    -------
        ScaleParams with c = diam(Y)² / diam(Gr⁺(D, d))² and mode auto

    """
    if cloud.n < 2:  # noqa: PLR2004
        msg = f"Need at least 2 points to choose a scale, got {cloud.n}"
        raise InsufficientPointsError(msg)
    diam = diameter(cloud)
    if diam == 0.0:
        msg = "All points coincide, the scale is undefined"
        raise DegenerateCloudError(msg)
    c = diam**2 / grassmann_diameter(cloud.intrinsic_dim, cloud.ambient_dim) ** 2
    _LOGGER.debug("diam(Y) = %g, c = %g", diam, c)
    return ScaleParams(c=c, mode=ScaleMode.AUTO)


def _dc_block(p: np.ndarray, q: np.ndarray, fp: np.ndarray, fq: np.ndarray, c: float) -> np.ndarray:
    """d_c between every row of p and every row of q, frames stacked alongside."""
    squared = cdist(p, q, "sqeuclidean")
    return np.sqrt(squared + c * oriented_distance_stack(fp[:, np.newaxis], fq[np.newaxis, :]) ** 2)


def dc_distance(p: np.ndarray, q: np.ndarray, fp: Frame | np.ndarray, fq: Frame | np.ndarray, c: float) -> float:
    """√(‖p - q‖² + c·d_Gr⁺(Fp, Fq)²), through the same kernel as distance_matrix."""
    if c < 0.0:
        msg = f"c must be nonnegative, got {c}"
        raise ParameterError(msg)
    p, q = np.asarray(p, dtype=np.float64), np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        msg = f"Points of shape {p.shape} and {q.shape} are not comparable"
        raise DimensionError(msg)
    fp_cols, fq_cols = as_columns(fp), as_columns(fq)
    if fp_cols.shape != fq_cols.shape or fp_cols.shape[0] != p.size:
        msg = f"Frames of shape {fp_cols.shape} and {fq_cols.shape} do not fit points in R^{p.size}"
        raise DimensionError(msg)
    return float(_dc_block(p.reshape(1, -1), q.reshape(1, -1), fp_cols[np.newaxis], fq_cols[np.newaxis], c)[0, 0])


def _symmetric_from_lower(entries: np.ndarray) -> np.ndarray:
    lower = np.tril(entries, -1)
    return lower + lower.T


def euclidean_matrix(cloud: PointCloud, *, n_threads: int | None = None) -> DistanceMatrix:
    """Pairwise Euclidean distances."""
    points = cloud.points

    def block(rows: range) -> np.ndarray:
        return cdist(points[rows.start : rows.stop], points, "euclidean")

    entries = np.vstack(map_row_blocks(block, cloud.n, n_threads=n_threads))
    return DistanceMatrix(_symmetric_from_lower(entries), metric_tag=MetricTag.EUCLIDEAN, c=0.0)


def distance_matrix(
    cloud: PointCloud,
    field: FrameField,
    params: ScaleParams,
    *,
    n_threads: int | None = None,
) -> DistanceMatrix:
    """All-pairs d_c over an oriented frame field.

    Args:
    ----
        cloud: PointCloud
        field: oriented FrameField on the same points
        params: ScaleParams
        n_threads: worker count for row blocks

    Returns:
    -------
        DistanceMatrix tagged grassmann_dc

    Raises:
    ------
        PreconditionError: the field has not been oriented

    """
    if not field.oriented:
        msg = "The d_c distance needs an oriented frame field"
        raise PreconditionError(msg)
    if len(field) != cloud.n or field.ambient_dim != cloud.ambient_dim:
        msg = f"Frame field {field.frames.shape} does not match cloud ({cloud.n}, {cloud.ambient_dim})"
        raise DimensionError(msg)
    points, frames, c = cloud.points, field.frames, params.c

    def block(rows: range) -> np.ndarray:
        return _dc_block(points[rows.start : rows.stop], points, frames[rows.start : rows.stop], frames, c)

    entries = np.vstack(map_row_blocks(block, cloud.n, block_size=64, n_threads=n_threads))
    _LOGGER.debug("Assembled %d×%d d_c matrix with c = %g", cloud.n, cloud.n, c)
    return DistanceMatrix(_symmetric_from_lower(entries), metric_tag=MetricTag.GRASSMANN_DC, c=c)


def subsample(cloud: PointCloud, m: int, seed: int | None = None) -> np.ndarray:
    """m indices drawn uniformly without replacement, sorted."""
    if m < 1:
        msg = f"Subsample size must be positive, got {m}"
        raise ParameterError(msg)
    if m >= cloud.n:
        return np.arange(cloud.n)
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(cloud.n, size=m, replace=False))
