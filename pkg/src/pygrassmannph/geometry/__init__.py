"""Subspace comparison kernels."""

from pygrassmannph.geometry.grassmann import (
    as_columns,
    det_sign,
    gram_svd,
    grassmann_distance,
    grassmann_distance_stack,
    oriented_distance_stack,
    oriented_grassmann_distance,
    oriented_grassmann_distance_ex,
    principal_angle_stack,
    principal_angles,
    projector_distance,
)

__all__ = [
    "as_columns",
    "det_sign",
    "gram_svd",
    "grassmann_distance",
    "grassmann_distance_stack",
    "oriented_distance_stack",
    "oriented_grassmann_distance",
    "oriented_grassmann_distance_ex",
    "principal_angle_stack",
    "principal_angles",
    "projector_distance",
]
