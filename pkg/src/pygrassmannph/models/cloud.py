"""Point cloud and neighbor graph models."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionError, ParameterError


@dataclass(frozen=True, eq=False)
class PointCloud:
    """n points in ℝ^D sampled from a d-dimensional manifold."""

    points: np.ndarray
    intrinsic_dim: int

    def __post_init__(self) -> None:
        """Validate coordinates and dimensions."""
        points = np.asarray(self.points, dtype=np.float64)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        if points.ndim != 2 or points.shape[0] < 1:  # noqa: PLR2004
            msg = f"Expected an (n, D) array with n >= 1, got shape {points.shape}"
            raise DimensionError(msg)
        if not np.all(np.isfinite(points)):
            msg = "Point coordinates must be finite"
            raise ParameterError(msg)
        if not 1 <= self.intrinsic_dim <= points.shape[1]:
            msg = f"Intrinsic dimension {self.intrinsic_dim} not in [1, {points.shape[1]}]"
            raise DimensionError(msg)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        """Number of points."""
        return int(self.points.shape[0])

    @property
    def ambient_dim(self) -> int:
        """Ambient dimension D."""
        return int(self.points.shape[1])

    def __len__(self) -> int:
        """Return the number of points."""
        return self.n

    def subset(self, indices: np.ndarray) -> PointCloud:
        """Return the sub-cloud at the given indices."""
        return PointCloud(self.points[np.asarray(indices, dtype=np.intp)], self.intrinsic_dim)


@dataclass(frozen=True, eq=False)
class NeighborGraph:
    """k nearest neighbors of every point, closest first, ties by index."""

    k: int
    lists: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        """Validate the adjacency array shape."""
        lists = np.asarray(self.lists, dtype=np.intp)
        if lists.ndim != 2 or lists.shape[1] != self.k:  # noqa: PLR2004
            msg = f"Expected an (n, {self.k}) index array, got shape {lists.shape}"
            raise DimensionError(msg)
        object.__setattr__(self, "lists", lists)

    @property
    def n(self) -> int:
        """Number of points."""
        return int(self.lists.shape[0])
