import math

import numpy as np
import pytest

from pygrassmannph.errors import ParameterError
from pygrassmannph.generators import (
    Torus,
    delay_embed,
    delay_steps,
    ellipse_sample,
    mobius_point,
    mobius_sample,
    perturbed_torus,
    torus_geodesic,
    torus_grid_params,
    torus_sample,
)


def test_torus_at_origin_parameters() -> None:
    jet = Torus(1.0, 0.25).jet(0.0, 0.0)
    assert jet.position == pytest.approx([1.25, 0.0, 0.0])
    assert jet.normal == pytest.approx([1.0, 0.0, 0.0])
    assert jet.second_form == pytest.approx(np.diag([-1.25, -0.25]))
    assert jet.second_form_fd == pytest.approx(np.diag([-1.25, -0.25]), abs=1e-6)


def test_torus_first_form() -> None:
    form = Torus(1.0, 0.25).first_form(np.array(0.3), np.array(math.pi / 2))
    assert form == pytest.approx(np.diag([1.0, 0.0625]))


def test_torus_second_form_matches_differences(rng: np.random.Generator) -> None:
    torus = Torus(2.0, 0.7)
    u, v = rng.uniform(0, 2 * math.pi, 100), rng.uniform(0, 2 * math.pi, 100)
    assert np.max(np.abs(torus.second_form(u, v) - torus.second_form_fd(u, v))) < 1e-6


def test_torus_tube_circle_has_no_covariant_derivative() -> None:
    jet = Torus(1.0, 0.25).jet(0.4, 1.1)
    assert jet.normal_curvature(np.array([0.0, 1.0])) == pytest.approx(4.0)
    assert jet.nabla_second_form_norm(np.array([0.0, 1.0])) == pytest.approx(0.0, abs=1e-5)


def test_torus_rejects_bad_radii() -> None:
    with pytest.raises(ParameterError):
        Torus(1.0, 1.0)
    with pytest.raises(ParameterError):
        torus_sample(1.0, 0.25, 0)
    with pytest.raises(ParameterError):
        torus_sample(1.0, 0.25, 10, mode="spiral")  # type: ignore[arg-type]


def test_torus_grid_sample() -> None:
    sample = torus_sample(1.0, 0.25, 400, grid_shape=(20, 10))
    assert sample.cloud.n == 200
    assert sample.field.oriented
    assert np.allclose(sample.params, torus_grid_params(20, 10))
    tangency = np.einsum("nak,na->nk", sample.field.frames, sample.surface.normal(*sample.params.T))
    assert np.max(np.abs(tangency)) < 1e-12


def test_torus_uniform_sample_is_seeded() -> None:
    first = torus_sample(1.0, 0.4, 300, seed=7, mode="uniform")
    second = torus_sample(1.0, 0.4, 300, seed=7, mode="uniform")
    assert first.cloud.n == 300
    assert np.array_equal(first.cloud.points, second.cloud.points)
    rho = np.linalg.norm(first.cloud.points[:, :2], axis=1)
    assert np.all((rho > 0.6 - 1e-12) & (rho < 1.4 + 1e-12))


def test_torus_geodesic_has_unit_speed() -> None:
    torus = Torus(1.0, 0.25)
    states = torus_geodesic(torus, (0.0, 0.3), 0.7, np.linspace(0.0, 2.0, 11))
    u, v, du, dv = states.T
    speed = np.sqrt(((1.0 + 0.25 * np.cos(v)) * du) ** 2 + (0.25 * dv) ** 2)
    assert speed == pytest.approx(np.ones(11), abs=1e-8)
    assert (u[0], v[0]) == (0.0, 0.3)


def test_perturbed_torus_without_displacement() -> None:
    base = torus_sample(1.0, 0.4, 128, grid_shape=(16, 8))
    cloud, field = perturbed_torus(1.0, 0.4, (16, 8), 0.0)
    assert np.array_equal(cloud.points, base.cloud.points)
    assert np.allclose(field.frames, base.field.frames)


def test_perturbed_torus_constant_shift() -> None:
    base = torus_sample(1.0, 0.4, 128, grid_shape=(16, 8))
    cloud, field = perturbed_torus(1.0, 0.4, (16, 8), 0.3, kind="constant")
    assert cloud.points - base.cloud.points == pytest.approx(np.tile([0.1, 0.2, 0.2], (128, 1)))
    assert np.allclose(field.frames, base.field.frames, atol=1e-9)
    with pytest.raises(ParameterError):
        perturbed_torus(1.0, 0.4, (16, 8), 0.3, kind="twist")  # type: ignore[arg-type]


def test_ellipse_sample() -> None:
    cloud, field = ellipse_sample(2.0, 1.0, 4)
    assert cloud.points == pytest.approx(np.array([[2.0, 0.0], [0.0, 1.0], [-2.0, 0.0], [0.0, -1.0]]), abs=1e-15)
    assert field.frames[0, :, 0] == pytest.approx([0.0, 1.0])
    assert field.oriented


def test_circle_tangents_are_perpendicular() -> None:
    cloud, field = ellipse_sample(1.0, 1.0, 50)
    assert np.einsum("na,na->n", cloud.points, field.frames[:, :, 0]) == pytest.approx(np.zeros(50), abs=1e-15)


def test_ellipse_rejects_bad_axes() -> None:
    with pytest.raises(ParameterError):
        ellipse_sample(0.0, 1.0, 10)


def test_mobius() -> None:
    assert mobius_point(1.0, np.array(0.0), np.array(0.0)) == pytest.approx([1.0, 0.0, 0.0])
    seam = mobius_point(1.0, np.array(2 * math.pi), np.array(0.2))
    assert seam == pytest.approx(mobius_point(1.0, np.array(0.0), np.array(-0.2)))
    first, second = mobius_sample(1.0, 0.3, 500, seed=3), mobius_sample(1.0, 0.3, 500, seed=3)
    assert np.array_equal(first.points, second.points)
    assert first.intrinsic_dim == 2
    with pytest.raises(ParameterError):
        mobius_sample(1.0, 1.0, 10)


@pytest.mark.parametrize("n", [0, -3])
def test_mobius_rejects_empty_sample(n: int) -> None:
    with pytest.raises(ParameterError, match="Sample size"):
        mobius_sample(1.0, 0.3, n)


def test_delay_embed_ramp() -> None:
    cloud = delay_embed(np.arange(1.0, 6.0), 1, 3)
    assert cloud.points.tolist() == [[1.0, 2.0, 3.0], [2.0, 3.0, 4.0], [3.0, 4.0, 5.0]]


def test_delay_embed_constant_series() -> None:
    cloud = delay_embed(np.full(10, 2.5), 2, 3)
    assert cloud.n == 6
    assert np.all(cloud.points == 2.5)


def test_delay_embed_sine_is_a_circle() -> None:
    times = np.arange(400) * 0.01
    series = np.sin(2 * math.pi * times)
    cloud = delay_embed(series, delay_steps(0.25, 0.01), 2)
    assert np.linalg.norm(cloud.points, axis=1) == pytest.approx(np.ones(cloud.n), abs=1e-3)


def test_delay_embed_errors() -> None:
    with pytest.raises(ParameterError):
        delay_embed(np.arange(4.0), 2, 3)
    with pytest.raises(ParameterError):
        delay_embed(np.arange(4.0), 0, 2)
    with pytest.raises(ParameterError):
        delay_steps(-1.0, 0.1)
    assert delay_steps(0.004, 0.01) == 1
