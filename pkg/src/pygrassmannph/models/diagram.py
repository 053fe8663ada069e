"""Persistence diagram model."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError


@dataclass(frozen=True, eq=False)
class PersistenceDiagram:
    """Bars (birth, death) of one homology degree over Z/2; death may be inf."""

    degree: int
    bars: np.ndarray

    def __post_init__(self) -> None:
        """Validate bars and store them sorted by (birth, death)."""
        bars = np.asarray(self.bars, dtype=np.float64).reshape(-1, 2)
        if np.any(np.isnan(bars)) or np.any(bars[:, 1] < bars[:, 0]):
            msg = f"Invalid bars in degree {self.degree}: death must be >= birth"
            raise ParameterError(msg)
        if bars.shape[0]:
            bars = bars[np.lexsort((bars[:, 1], bars[:, 0]))]
        object.__setattr__(self, "bars", bars)

    def __len__(self) -> int:
        """Return the number of bars."""
        return int(self.bars.shape[0])

    @property
    def finite(self) -> np.ndarray:
        """Bars with finite death."""
        return self.bars[np.isfinite(self.bars[:, 1])]

    @property
    def infinite(self) -> np.ndarray:
        """Bars with infinite death."""
        return self.bars[~np.isfinite(self.bars[:, 1])]

    @property
    def persistence(self) -> np.ndarray:
        """death - birth per bar."""
        return self.bars[:, 1] - self.bars[:, 0]

    def same_bars(self, other: PersistenceDiagram, *, tol: float = 0.0) -> bool:
        """Multiset equality of bars, entrywise within tol."""
        if self.degree != other.degree or len(self) != len(other):
            return False
        mine, theirs = self.bars, other.bars
        if not np.array_equal(np.isinf(mine), np.isinf(theirs)):
            return False
        finite = np.isfinite(mine)
        return bool(np.all(np.abs(mine[finite] - theirs[finite]) <= tol))

    def __str__(self) -> str:
        """Represent the diagram as a string."""
        return f"H{self.degree}[{len(self)} bars]"
