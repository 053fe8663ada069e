"""Shared fixtures."""

from __future__ import annotations

import numpy as np
import pytest

from pygrassmannph.models import Frame


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


def random_frame(rng: np.random.Generator, D: int, d: int) -> Frame:
    """Orthonormal frame spanning d Gaussian vectors in ℝ^D."""
    return Frame.orthonormalize(rng.standard_normal((D, d)))
