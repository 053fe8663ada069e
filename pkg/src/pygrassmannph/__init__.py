"""Persistent homology of point clouds under the d_c metric on the oriented Grassmannian bundle."""

from pygrassmannph.models import DistanceMatrix, FrameField, PersistenceDiagram, PointCloud, ScaleParams

from .errors import (
    DegenerateNeighborhoodError,
    DimensionError,
    GrassmannPHError,
    InconsistentOrientationError,
    InputFileError,
    MatrixError,
    NumericsError,
    ParameterError,
    ParseError,
    PreconditionError,
)
from .geometry import grassmann_distance, oriented_grassmann_distance, principal_angles
from .persistence import bottleneck_distance, vr_persistence
from .pipeline import choose_scale, distance_matrix, estimate_frame_field, knn, propagate_orientation

__all__ = [
    "DegenerateNeighborhoodError",
    "DimensionError",
    "DistanceMatrix",
    "FrameField",
    "GrassmannPHError",
    "InconsistentOrientationError",
    "InputFileError",
    "MatrixError",
    "NumericsError",
    "ParameterError",
    "ParseError",
    "PersistenceDiagram",
    "PointCloud",
    "PreconditionError",
    "ScaleParams",
    "bottleneck_distance",
    "choose_scale",
    "distance_matrix",
    "estimate_frame_field",
    "grassmann_distance",
    "knn",
    "oriented_grassmann_distance",
    "principal_angles",
    "propagate_orientation",
    "vr_persistence",
]
