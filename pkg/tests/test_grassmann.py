import math

import numpy as np
import pytest

from pygrassmannph.errors import DimensionError
from pygrassmannph.geometry import (
    gram_svd,
    grassmann_distance,
    oriented_distance_stack,
    oriented_grassmann_distance,
    oriented_grassmann_distance_ex,
    principal_angles,
    projector_distance,
)
from pygrassmannph.models import Frame

from .conftest import random_frame

E1 = Frame(np.array([[1.0], [0.0]]))
E2 = Frame(np.array([[0.0], [1.0]]))
XY = Frame(np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]))


def test_identical_frames() -> None:
    angles = principal_angles(XY, XY)
    assert np.allclose(angles.angles, 0.0, atol=1e-7)
    assert angles.det_sign == 1
    assert grassmann_distance(XY, XY) == pytest.approx(0.0, abs=1e-7)
    assert oriented_grassmann_distance(XY, XY) == pytest.approx(0.0, abs=1e-7)


def test_orthogonal_lines_are_degenerate() -> None:
    value, degenerate = oriented_grassmann_distance_ex(E1, E2)
    assert degenerate
    assert value == pytest.approx(math.pi / 2)
    assert grassmann_distance(E1, E2) == pytest.approx(math.pi / 2)


def test_reversed_line() -> None:
    assert grassmann_distance(E1, E1.flipped()) == pytest.approx(0.0, abs=1e-7)
    assert oriented_grassmann_distance(E1, E1.flipped()) == pytest.approx(math.pi)


def test_reversed_plane() -> None:
    sigma, sign = gram_svd(XY, XY.flipped())
    assert np.allclose(sigma, 1.0)
    assert sign == -1
    assert oriented_grassmann_distance(XY, XY.flipped()) == pytest.approx(math.pi)


@pytest.mark.parametrize("alpha", [0.1, 0.7, 1.2])
def test_rotated_line(alpha: float) -> None:
    rotated = Frame(np.array([[math.cos(alpha)], [math.sin(alpha)]]))
    assert grassmann_distance(E1, rotated) == pytest.approx(alpha)
    assert oriented_grassmann_distance(E1, rotated) == pytest.approx(alpha)


def test_tilted_plane_angles() -> None:
    alpha = 0.4
    tilted = Frame(np.array([[1.0, 0.0], [0.0, math.cos(alpha)], [0.0, math.sin(alpha)]]))
    angles = principal_angles(XY, tilted)
    assert angles.angles == pytest.approx([alpha, 0.0], abs=1e-7)
    assert angles.largest == pytest.approx(alpha)


def test_projector_identity(rng: np.random.Generator) -> None:
    for _ in range(200):
        D = int(rng.integers(2, 9))
        d = int(rng.integers(1, min(4, D - 1) + 1))
        a, b = random_frame(rng, D, d), random_frame(rng, D, d)
        theta = principal_angles(a, b).angles
        assert projector_distance(a, b) ** 2 == pytest.approx(2.0 * np.sum(np.sin(theta) ** 2), abs=1e-8)


def test_oriented_dominates_and_triangle(rng: np.random.Generator) -> None:
    for _ in range(200):
        a, b, c = (random_frame(rng, 5, 2) for _ in range(3))
        assert oriented_grassmann_distance(a, b) >= grassmann_distance(a, b) - 1e-12
        assert grassmann_distance(a, b) <= grassmann_distance(a, c) + grassmann_distance(c, b) + 1e-8


def test_orthogonal_planes_in_r4() -> None:
    a = np.eye(4)[:, :2]
    b = np.eye(4)[:, 2:]
    sigma, sign = gram_svd(a, b)
    assert np.array_equal(sigma, [0.0, 0.0])
    assert sign == 0
    assert principal_angles(a, b).angles == pytest.approx([math.pi / 2, math.pi / 2])
    value, degenerate = oriented_grassmann_distance_ex(a, b)
    assert degenerate
    assert value == pytest.approx(math.pi / math.sqrt(2.0))
    assert grassmann_distance(a, b) == pytest.approx(math.pi / math.sqrt(2.0))
    assert projector_distance(a, b) == pytest.approx(2.0)


def test_plane_rotated_by_03() -> None:
    theta = 0.3
    rotated = Frame(np.array([[math.cos(theta), 0.0], [0.0, 1.0], [math.sin(theta), 0.0]]))
    sigma, sign = gram_svd(XY, rotated)
    assert sigma == pytest.approx([1.0, math.cos(theta)], abs=1e-12)
    assert sign == 1
    assert principal_angles(XY, rotated).angles == pytest.approx([theta, 0.0], abs=1e-12)
    assert grassmann_distance(XY, rotated) == pytest.approx(theta, abs=1e-12)
    assert oriented_grassmann_distance(XY, rotated) == pytest.approx(theta, abs=1e-12)
    assert projector_distance(XY, rotated) == pytest.approx(math.sqrt(2.0) * math.sin(theta), abs=1e-12)
    assert projector_distance(XY, rotated) == pytest.approx(0.41793, abs=1e-5)


def test_invariant_under_special_orthogonal_change_of_basis(rng: np.random.Generator) -> None:
    for _ in range(50):
        a, b = random_frame(rng, 5, 2), random_frame(rng, 5, 2)
        alpha = rng.uniform(0.0, 2.0 * math.pi)
        rotation = np.array([[math.cos(alpha), -math.sin(alpha)], [math.sin(alpha), math.cos(alpha)]])
        expected = oriented_grassmann_distance(a, b)
        assert oriented_grassmann_distance(a.columns @ rotation, b) == pytest.approx(expected, abs=1e-10)
        assert oriented_grassmann_distance(a, b.columns @ rotation) == pytest.approx(expected, abs=1e-10)
        assert grassmann_distance(a.columns @ rotation, b.columns @ rotation) == pytest.approx(
            grassmann_distance(a, b), abs=1e-10
        )


def test_overshooting_singular_values_are_clamped() -> None:
    stretched = XY.columns * (1.0 + 1e-12)
    sigma, _ = gram_svd(stretched, stretched)
    assert np.all(sigma <= 1.0)
    theta = principal_angles(stretched, stretched).angles
    assert np.all(np.isfinite(theta))
    assert np.isfinite(grassmann_distance(stretched, stretched))
    assert np.isfinite(oriented_grassmann_distance(stretched, stretched))
    assert oriented_grassmann_distance(stretched, stretched) == pytest.approx(0.0, abs=1e-6)


def test_small_angles_keep_precision() -> None:
    alpha = 1e-9
    tilted = Frame(np.array([[1.0, 0.0], [0.0, math.cos(alpha)], [0.0, math.sin(alpha)]]))
    assert grassmann_distance(XY, tilted) == pytest.approx(alpha, rel=1e-6)


def test_stack_matches_scalar(rng: np.random.Generator) -> None:
    frames = [random_frame(rng, 4, 2) for _ in range(6)]
    frames.append(frames[0].flipped())
    stack = np.stack([frame.columns for frame in frames])
    batched = oriented_distance_stack(stack[:, np.newaxis], stack[np.newaxis, :])
    for i, a in enumerate(frames):
        for j, b in enumerate(frames):
            assert batched[i, j] == pytest.approx(oriented_grassmann_distance(a, b), rel=1e-14, abs=1e-14)


def test_dimension_mismatch() -> None:
    with pytest.raises(DimensionError):
        grassmann_distance(E1, XY)
