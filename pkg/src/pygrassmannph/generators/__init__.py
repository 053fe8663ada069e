"""Synthetic samples with analytic ground truth and point cloud loaders."""

from pygrassmannph.generators.curves import ellipse_sample, mobius_point, mobius_sample
from pygrassmannph.generators.delay import delay_embed, delay_steps
from pygrassmannph.generators.flows import (
    Trajectory,
    double_gyre_trajectory,
    double_gyre_velocity,
    rk4_integrate,
    rk4_step,
)
from pygrassmannph.generators.loaders import infer_format, load_points
from pygrassmannph.generators.surfaces import (
    ParametrizedSurface,
    PerturbedSurface,
    perturbed_torus,
    SurfaceJet,
    Torus,
    TorusSample,
    torus_geodesic,
    torus_grid_params,
    torus_sample,
)

__all__ = [
    "ParametrizedSurface",
    "PerturbedSurface",
    "SurfaceJet",
    "Torus",
    "TorusSample",
    "Trajectory",
    "delay_embed",
    "delay_steps",
    "double_gyre_trajectory",
    "double_gyre_velocity",
    "ellipse_sample",
    "torus_geodesic",
    "infer_format",
    "load_points",
    "mobius_point",
    "mobius_sample",
    "perturbed_torus",
    "rk4_integrate",
    "rk4_step",
    "torus_grid_params",
    "torus_sample",
]
