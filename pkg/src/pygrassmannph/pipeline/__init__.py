"""Tangent-frame pipeline: neighbors, local PCA, orientation and the d_c metric."""

from pygrassmannph.pipeline.metric import (
    choose_scale,
    dc_distance,
    diameter,
    distance_matrix,
    euclidean_matrix,
    grassmann_diameter,
    subsample,
)
from pygrassmannph.pipeline.neighbors import default_k, edge_lengths, knn, symmetrize
from pygrassmannph.pipeline.orientation import edge_determinants, orientation_safety_radius, propagate_orientation
from pygrassmannph.pipeline.tangents import RateFit, estimate_frame_field, local_pca_frame, mean_frame_error, rate_check

__all__ = [
    "RateFit",
    "choose_scale",
    "dc_distance",
    "default_k",
    "diameter",
    "distance_matrix",
    "edge_determinants",
    "edge_lengths",
    "estimate_frame_field",
    "euclidean_matrix",
    "grassmann_diameter",
    "knn",
    "local_pca_frame",
    "mean_frame_error",
    "orientation_safety_radius",
    "propagate_orientation",
    "rate_check",
    "subsample",
    "symmetrize",
]
