"""Numerical checks of curvature, volume, bottleneck and stability inequalities."""

from pygrassmannph.checks.runner import CHECKS, check_persistence_oracle, check_projector_identity, run_checks, summary_table
from pygrassmannph.checks.stability import StabilityRow, check_stability, stability_experiment
from pygrassmannph.checks.theory import (
    RadiusBound,
    check_curvature_closed_form,
    check_curvature_monotonicity,
    check_curvature_ratio_zero,
    check_log_ii_bound,
    check_volume_bound,
    curvature_ratio,
    homotopy_radius_bound,
)
from pygrassmannph.checks.torus import (
    TorusQuantities,
    check_normalized_bottleneck,
    check_torus_ratios,
    torus_quantities,
    torus_vol_c,
)

__all__ = [
    "CHECKS",
    "RadiusBound",
    "StabilityRow",
    "TorusQuantities",
    "check_curvature_closed_form",
    "check_curvature_monotonicity",
    "check_curvature_ratio_zero",
    "check_log_ii_bound",
    "check_normalized_bottleneck",
    "check_persistence_oracle",
    "check_projector_identity",
    "check_stability",
    "check_torus_ratios",
    "check_volume_bound",
    "curvature_ratio",
    "homotopy_radius_bound",
    "run_checks",
    "stability_experiment",
    "summary_table",
    "torus_quantities",
    "torus_vol_c",
]
