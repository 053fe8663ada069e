import math

import numpy as np
import pytest

from pygrassmannph.checks.runner import random_distance_matrix
from pygrassmannph.errors import MatrixError, ParameterError, SizeError
from pygrassmannph.generators import torus_sample
from pygrassmannph.models import PersistenceDiagram, PointCloud, ScaleParams
from pygrassmannph.persistence import (
    bottleneck_distance,
    brute_force_persistence,
    enclosing_radius,
    prominent_bars,
    vr_persistence,
)
from pygrassmannph.persistence.cohomology import RipsComplex, binomial_table
from pygrassmannph.pipeline import distance_matrix, euclidean_matrix


def _square() -> np.ndarray:
    points = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    return euclidean_matrix(PointCloud(points, intrinsic_dim=1)).entries


@pytest.mark.parametrize("engine", [vr_persistence, brute_force_persistence])
def test_tetrahedron(engine) -> None:  # noqa: ANN001
    entries = np.ones((4, 4)) - np.eye(4)
    h0, h1 = engine(entries, 1)
    assert h0.bars.tolist() == [[0.0, 1.0], [0.0, 1.0], [0.0, 1.0], [0.0, math.inf]]
    assert len(h1) == 0


@pytest.mark.parametrize("engine", [vr_persistence, brute_force_persistence])
def test_square_loop(engine) -> None:  # noqa: ANN001
    _, h1 = engine(_square(), 1)
    assert h1.bars.tolist() == [[pytest.approx(math.sqrt(2.0)), 2.0]]


def test_single_point() -> None:
    (h0,) = vr_persistence(np.zeros((1, 1)), 0)
    assert h0.bars.tolist() == [[0.0, math.inf]]


def test_enclosing_radius() -> None:
    assert enclosing_radius(_square()) == pytest.approx(2.0)


def test_oracle_equivalence(rng: np.random.Generator) -> None:
    for _ in range(40):
        n = int(rng.integers(1, 13))
        maxdim = int(rng.integers(0, 3))
        entries = random_distance_matrix(rng, n)
        for fast, slow in zip(vr_persistence(entries, maxdim), brute_force_persistence(entries, maxdim), strict=True):
            assert fast.same_bars(slow)


def test_oracle_equivalence_with_ties(rng: np.random.Generator) -> None:
    for _ in range(20):
        n = int(rng.integers(4, 11))
        upper = np.triu(rng.integers(1, 4, size=(n, n)).astype(float), k=1)
        entries = upper + upper.T
        for fast, slow in zip(vr_persistence(entries, 2), brute_force_persistence(entries, 2), strict=True):
            assert fast.same_bars(slow)


def test_octahedron_has_a_void() -> None:
    points = np.vstack([np.eye(3), -np.eye(3)])
    _, h1, h2 = vr_persistence(euclidean_matrix(PointCloud(points, intrinsic_dim=2)), 2)
    assert len(h1) == 0
    assert h2.bars.tolist() == [[pytest.approx(math.sqrt(2.0)), 2.0]]


def test_clusters_and_threshold(rng: np.random.Generator) -> None:
    centers = np.array([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]])
    points = np.vstack([center + 0.1 * rng.normal(size=(10, 2)) for center in centers])
    matrix = euclidean_matrix(PointCloud(points, intrinsic_dim=1))
    assert len(vr_persistence(matrix, 0)[0].infinite) == 1
    assert len(vr_persistence(matrix, 0, threshold=2.0)[0].infinite) == 3


def test_stability_under_entry_perturbation(rng: np.random.Generator) -> None:
    entries = random_distance_matrix(rng, 50)
    base = vr_persistence(entries, 1, threshold=np.inf)
    for delta in (1e-3, 1e-2):
        noise = np.triu(rng.uniform(-delta, delta, size=(50, 50)), k=1)
        perturbed = np.clip(entries + noise + noise.T, 0.0, None)
        for before, after in zip(base, vr_persistence(perturbed, 1, threshold=np.inf), strict=True):
            assert bottleneck_distance(before, after) <= 2.0 * delta + 1e-12


def test_raising_c_delays_merges() -> None:
    sample = torus_sample(1.0, 0.4, 60, mode="grid")
    low = vr_persistence(distance_matrix(sample.cloud, sample.field, ScaleParams(c=0.01)), 0)[0]
    high = vr_persistence(distance_matrix(sample.cloud, sample.field, ScaleParams(c=1.0)), 0)[0]
    assert np.all(np.sort(high.finite[:, 1]) >= np.sort(low.finite[:, 1]) - 1e-12)


def test_rips_complex_indexing() -> None:
    table = binomial_table(6, 3)
    assert table[5, 2] == 10
    complex_ = RipsComplex(np.ones((6, 6)) - np.eye(6), 1.0, 2)
    assert complex_.vertices(0, 2).tolist() == [0, 1, 2]
    assert complex_.vertices(19, 2).tolist() == [3, 4, 5]
    values, indices, endpoints = complex_.edges()
    assert values.size == indices.size == 15
    assert endpoints.shape == (15, 2)


def test_prominent_bars() -> None:
    diagram = PersistenceDiagram(degree=1, bars=[(0.0, 0.1), (0.2, 1.2), (0.5, math.inf)])
    assert prominent_bars(diagram, 0.25, 2.0).tolist() == [[0.2, 1.2], [0.5, math.inf]]


def test_errors() -> None:
    with pytest.raises(MatrixError):
        vr_persistence(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ParameterError):
        vr_persistence(_square(), 3)
    with pytest.raises(ParameterError):
        vr_persistence(_square(), 1, threshold=-1.0)
    with pytest.raises(ParameterError):
        vr_persistence(_square(), 1, engine="other")  # type: ignore[arg-type]
    with pytest.raises(SizeError):
        brute_force_persistence(np.zeros((41, 41)))


def test_giotto_engine_agrees(rng: np.random.Generator) -> None:
    entries = random_distance_matrix(rng, 30)
    for ours, theirs in zip(vr_persistence(entries, 2), vr_persistence(entries, 2, engine="giotto"), strict=True):
        assert ours.same_bars(theirs, tol=1e-6)


def test_auto_engine_on_large_input(rng: np.random.Generator) -> None:
    entries = random_distance_matrix(rng, 250)
    (auto,) = vr_persistence(entries, 0, engine="auto")
    (native,) = vr_persistence(entries, 0, engine="native")
    assert auto.same_bars(native, tol=1e-6)
