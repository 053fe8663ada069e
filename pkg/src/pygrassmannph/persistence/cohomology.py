"""Vietoris-Rips persistent cohomology over Z/2 with implicit coboundaries.

Simplices are encoded by the combinatorial number system: the k-simplex
with vertices a_0 < … < a_k has index Σ C(a_i, i + 1). Within one
dimension the filtration order is (diameter, index). Columns are reduced
in reverse filtration order; the pivot of a coboundary column is its
earliest coface. Degree 0 is handled by union-find, and the pivots of
each degree clear the columns of the next one.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterator

_LOGGER = logging.getLogger(__name__)


def binomial_table(n: int, max_k: int) -> np.ndarray:
    """table[v, j] = C(v, j) for 0 <= v <= n, 0 <= j <= max_k."""
    table = np.zeros((n + 1, max_k + 1), dtype=np.int64)
    table[:, 0] = 1
    for v in range(1, n + 1):
        table[v, 1:] = table[v - 1, 1:] + table[v - 1, :-1]
    return table


class RipsComplex:
    """Implicit Vietoris-Rips complex of a distance matrix below a threshold."""

    def __init__(self, dist: np.ndarray, threshold: float, max_dim: int) -> None:
        """Initialize the complex.

        Args:
        ----
            dist: symmetric distance matrix
            threshold: largest simplex diameter kept
            max_dim: largest simplex dimension that will be enumerated

        """
        self.dist = dist
        self.n = int(dist.shape[0])
        self.threshold = threshold
        self.binom = binomial_table(self.n, max_dim + 2)

    def vertices(self, index: int, dim: int) -> np.ndarray:
        """Decode a dim-simplex index into its ascending vertex array."""
        verts = np.empty(dim + 1, dtype=np.intp)
        for j in range(dim + 1, 0, -1):
            v = int(np.searchsorted(self.binom[:, j], index, side="right")) - 1
            verts[j - 1] = v
            index -= int(self.binom[v, j])
        return verts

    def edges(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edges within the threshold as (values, indices, endpoints), in filtration order."""
        i, j = np.tril_indices(self.n, -1)
        values = self.dist[i, j]
        keep = values <= self.threshold
        i, j, values = i[keep], j[keep], values[keep]
        indices = j + self.binom[i, 2]
        order = np.lexsort((indices, values))
        return values[order], indices[order], np.column_stack((j, i))[order]

    def cofaces(self, verts: np.ndarray, value: float, *, above_only: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """Cofaces of a simplex within the threshold as (values, indices).

        With above_only, only vertices larger than every vertex of the
        simplex are added, which enumerates each coface exactly once.
        """
        reach = self.dist[verts].max(axis=0)
        mask = reach <= self.threshold
        mask[verts] = False
        if above_only:
            mask[: verts[-1] + 1] = False
        added = np.flatnonzero(mask)
        if added.size == 0:
            return np.empty(0), np.empty(0, dtype=np.int64)
        values = np.maximum(reach[added], value)
        size = verts.size
        ranks = np.arange(1, size + 1)
        prefix = np.concatenate(([0], np.cumsum(self.binom[verts, ranks])))
        suffix = np.concatenate((np.cumsum(self.binom[verts, ranks + 1][::-1])[::-1], [0]))
        below = np.searchsorted(verts, added)
        indices = prefix[below] + self.binom[added, below + 1] + suffix[below]
        return values, indices


def _union_find_h0(n: int, edge_values: np.ndarray, endpoints: np.ndarray) -> tuple[list[tuple[float, float]], np.ndarray]:
    """Degree-0 bars and the mask of edges that merge two components."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bars: list[tuple[float, float]] = []
    merging = np.zeros(edge_values.size, dtype=bool)
    components = n
    for position, (value, (i, j)) in enumerate(zip(edge_values.tolist(), endpoints.tolist(), strict=True)):
        if components == 1:
            break
        root_i, root_j = find(i), find(j)
        if root_i == root_j:
            continue
        parent[max(root_i, root_j)] = min(root_i, root_j)
        merging[position] = True
        components -= 1
        if value > 0.0:
            bars.append((0.0, value))
    bars.extend((0.0, np.inf) for _ in range(components))
    return bars, merging


def _reduce(
    complex_: RipsComplex,
    dim: int,
    columns: Iterator[tuple[float, int]],
) -> tuple[list[tuple[float, float]], set[int]]:
    """Reduce the dim-coboundary columns; return bars and the pivot set."""
    bars: list[tuple[float, float]] = []
    coface_values: dict[int, float] = {}
    reduced: dict[int, set[int]] = {}

    def pivot_of(column: set[int]) -> int | None:
        if not column:
            return None
        return min(column, key=lambda s: (coface_values[s], s))

    for value, index in columns:
        values, indices = complex_.cofaces(complex_.vertices(index, dim), value)
        index_list = indices.tolist()
        coface_values.update(zip(index_list, values.tolist(), strict=True))
        column = set(index_list)
        pivot = pivot_of(column)
        while pivot is not None and pivot in reduced:
            column ^= reduced[pivot]
            pivot = pivot_of(column)
        if pivot is None:
            bars.append((value, np.inf))
            continue
        reduced[pivot] = column
        death = coface_values[pivot]
        if death > value:
            bars.append((value, death))
    return bars, set(reduced)


def _reverse_order(values: np.ndarray, indices: np.ndarray) -> Iterator[tuple[float, int]]:
    order = np.lexsort((indices, values))[::-1]
    return zip(values[order].tolist(), indices[order].tolist(), strict=True)


def _simplices_above(
    complex_: RipsComplex,
    dim: int,
    values: np.ndarray,
    indices: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """All (dim + 1)-simplices within the threshold, from the dim-simplices."""
    all_values, all_indices = [], []
    for value, index in zip(values.tolist(), indices.tolist(), strict=True):
        cv, ci = complex_.cofaces(complex_.vertices(index, dim), value, above_only=True)
        if ci.size:
            all_values.append(cv)
            all_indices.append(ci)
    if not all_values:
        return np.empty(0), np.empty(0, dtype=np.int64)
    return np.concatenate(all_values), np.concatenate(all_indices)


def rips_cohomology(dist: np.ndarray, maxdim: int, threshold: float) -> list[list[tuple[float, float]]]:
    """Bars of degrees 0..maxdim of the Rips filtration truncated at threshold.

    Args:
    ----
        dist: validated symmetric distance matrix with zero diagonal
        maxdim: top homology degree
        threshold: largest simplex diameter

    Returns:
    -------
        one list of (birth, death) pairs per degree, zero-length pairs removed

    """
    n = int(dist.shape[0])
    complex_ = RipsComplex(dist, threshold, maxdim + 1)
    edge_values, edge_indices, endpoints = complex_.edges()
    h0, merging = _union_find_h0(n, edge_values, endpoints)
    result = [h0]
    _LOGGER.debug("Rips complex: %d points, %d edges below %g", n, edge_indices.size, threshold)
    if maxdim == 0:
        return result

    cleared = set(edge_indices[merging].tolist())
    simplex_values, simplex_indices = edge_values, edge_indices
    for dim in range(1, maxdim + 1):
        if dim > 1:
            simplex_values, simplex_indices = _simplices_above(complex_, dim - 1, simplex_values, simplex_indices)
        keep = np.array([index not in cleared for index in simplex_indices.tolist()], dtype=bool)
        columns = _reverse_order(simplex_values[keep], simplex_indices[keep]) if keep.size else iter(())
        bars, cleared = _reduce(complex_, dim, columns)
        _LOGGER.debug("Degree %d: %d columns, %d bars", dim, int(keep.sum()), len(bars))
        result.append(bars)
    return result
