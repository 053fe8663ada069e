"""Desk-scale end-to-end runs; selected with `pytest -m slow`."""

import math

import numpy as np
import pytest

from pygrassmannph.checks import (
    check_normalized_bottleneck,
    check_persistence_oracle,
    check_projector_identity,
    check_stability,
    check_torus_ratios,
    stability_experiment,
)
from pygrassmannph.generators import delay_embed, delay_steps, double_gyre_trajectory, mobius_sample, torus_sample
from pygrassmannph.models import InconsistencyReport, PointCloud, TrajectoryConfig
from pygrassmannph.pipeline import (
    choose_scale,
    default_k,
    diameter,
    distance_matrix,
    estimate_frame_field,
    euclidean_matrix,
    knn,
    mean_frame_error,
    propagate_orientation,
    rate_check,
    subsample,
    symmetrize,
)
from pygrassmannph.persistence import prominent_bars, vr_persistence

pytestmark = pytest.mark.slow

# Share of the Euclidean sample diameter a bar must persist to count as prominent.
THIN_TORUS_PROMINENCE = 0.25
DOUBLE_GYRE_PROMINENCE = 0.1


def _oriented_field(cloud: PointCloud, k: int | None = None):  # noqa: ANN202
    graph = knn(cloud, k or default_k(cloud.n, cloud.intrinsic_dim))
    return propagate_orientation(estimate_frame_field(cloud, graph), symmetrize(graph))


def _prominent_counts(cloud: PointCloud, indices: np.ndarray, fraction: float) -> tuple[list[int], list[int]]:
    field = _oriented_field(cloud)
    assert not isinstance(field, InconsistencyReport)
    sub = cloud.subset(indices)
    scale = diameter(sub)
    dc = vr_persistence(distance_matrix(sub, field.subset(indices).with_cloud(sub), choose_scale(sub)), 2, engine="auto")
    euclidean = vr_persistence(euclidean_matrix(sub), 1, engine="auto")
    return (
        [len(prominent_bars(diagram, fraction, scale)) for diagram in dc],
        [len(prominent_bars(diagram, fraction, scale)) for diagram in euclidean],
    )


def test_grassmann_kernels() -> None:
    assert all(verdict.passed for verdict in check_projector_identity(1000))


def test_persistence_oracle() -> None:
    assert all(verdict.passed for verdict in check_persistence_oracle(200))


def test_closed_forms() -> None:
    assert all(verdict.passed for verdict in check_torus_ratios(1.0, 1e-3))
    r = 0.25
    upper = 12.0 * r * r / math.pi**2
    assert all(verdict.passed for verdict in check_normalized_bottleneck(1.0, r, [upper * k / 20 for k in range(1, 21)]))


def test_thin_torus_separation() -> None:
    cloud = torus_sample(1.0, 0.1, 2000, seed=0, mode="uniform").cloud
    dc, euclidean = _prominent_counts(cloud, subsample(cloud, 800, seed=0), THIN_TORUS_PROMINENCE)
    assert dc[1] == 2
    assert dc[2] >= 1
    assert euclidean[1] == 1


def test_double_gyre_reconstruction() -> None:
    trajectory = double_gyre_trajectory(TrajectoryConfig())
    cloud = delay_embed(trajectory.x, delay_steps(5.0, trajectory.spacing), 4, intrinsic_dim=2)
    dc, euclidean = _prominent_counts(cloud, subsample(cloud, 1000, seed=0), DOUBLE_GYRE_PROMINENCE)
    assert dc[1] >= 2
    assert dc[2] >= 1
    assert euclidean[1] < dc[1]


def test_orientation_on_torus_and_mobius() -> None:
    torus = torus_sample(1.0, 0.25, 2000, seed=0, mode="uniform").cloud
    assert not isinstance(_oriented_field(torus), InconsistencyReport)
    report = _oriented_field(mobius_sample(1.0, 0.3, 1000, seed=0), k=10)
    assert isinstance(report, InconsistencyReport)
    assert report.violations


def test_stability_under_normal_perturbation() -> None:
    rows = stability_experiment(1.0, 0.4, (24, 10), (0.0, 0.005, 0.01, 0.02, 0.04), engine="auto")
    assert all(value <= 1e-3 for value in rows[0].distances.values())
    assert all(verdict.passed for verdict in check_stability(rows))


def test_tangent_rate() -> None:
    errors = []
    for n in (500, 1000, 2000, 4000):
        sample = torus_sample(1.0, 0.4, n, seed=n, mode="uniform")
        graph = knn(sample.cloud, default_k(n, 2))
        errors.append((n, mean_frame_error(estimate_frame_field(sample.cloud, graph), sample.field)))
    fit = rate_check(errors, 2)
    assert -0.9 <= fit.slope <= -0.15
