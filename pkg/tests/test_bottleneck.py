import itertools
import math

import numpy as np
import pytest

from pygrassmannph.errors import ParameterError
from pygrassmannph.models import PersistenceDiagram
from pygrassmannph.persistence import bottleneck_by_degree, bottleneck_distance


def _diagram(bars: list[tuple[float, float]], degree: int = 1) -> PersistenceDiagram:
    return PersistenceDiagram(degree=degree, bars=np.array(bars, dtype=float).reshape(-1, 2))


def _exhaustive(first: np.ndarray, second: np.ndarray) -> float:
    """Minimum over all matchings with diagonal slots; small diagrams only."""
    m, k = len(first), len(second)
    size = m + k
    cost = np.zeros((size, size))
    for i in range(size):
        for j in range(size):
            if i < m and j < k:
                cost[i, j] = np.max(np.abs(first[i] - second[j]))
            elif i < m:
                cost[i, j] = (first[i, 1] - first[i, 0]) / 2.0
            elif j < k:
                cost[i, j] = (second[j, 1] - second[j, 0]) / 2.0
    return min(max((cost[i, p[i]] for i in range(size)), default=0.0) for p in itertools.permutations(range(size)))


@pytest.mark.parametrize(
    ("first", "second", "expected"),
    [
        ([(0.0, 2.0)], [(0.0, 2.0)], 0.0),
        ([(0.0, 2.0)], [], 1.0),
        ([(0.0, 2.0)], [(0.5, 2.5)], 0.5),
        ([], [], 0.0),
        ([(0.0, 1.0), (0.0, 3.0)], [(0.0, 3.2)], 0.5),
    ],
)
def test_examples(first: list, second: list, expected: float) -> None:
    assert bottleneck_distance(_diagram(first), _diagram(second)) == pytest.approx(expected)


def test_infinite_bars() -> None:
    assert bottleneck_distance(_diagram([(0.0, math.inf)], 0), _diagram([], 0)) == math.inf
    assert bottleneck_distance(_diagram([(0.0, math.inf)], 0), _diagram([(0.25, math.inf)], 0)) == pytest.approx(0.25)


def test_symmetric_and_matches_exhaustive(rng: np.random.Generator) -> None:
    for _ in range(30):
        births_a, births_b = rng.uniform(0, 1, int(rng.integers(0, 4))), rng.uniform(0, 1, int(rng.integers(0, 4)))
        first = np.column_stack((births_a, births_a + rng.uniform(0, 1, births_a.size)))
        second = np.column_stack((births_b, births_b + rng.uniform(0, 1, births_b.size)))
        expected = _exhaustive(first, second)
        assert bottleneck_distance(_diagram(first), _diagram(second)) == pytest.approx(expected, abs=1e-12)
        assert bottleneck_distance(_diagram(second), _diagram(first)) == pytest.approx(expected, abs=1e-12)


def test_degree_mismatch() -> None:
    with pytest.raises(ParameterError):
        bottleneck_distance(_diagram([], 0), _diagram([], 1))


def test_by_degree_fills_missing_degrees() -> None:
    first = [_diagram([(0.0, math.inf)], 0), _diagram([(0.0, 2.0)], 1)]
    second = [_diagram([(0.0, math.inf)], 0)]
    assert bottleneck_by_degree(first, second) == {0: 0.0, 1: pytest.approx(1.0)}
