"""Ellipse and Möbius band samples."""

from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError
from ..models.cloud import PointCloud
from ..models.frame import FrameField, Provenance


def ellipse_sample(a: float, b: float, n: int) -> tuple[PointCloud, FrameField]:
    """n equispaced parameters t on (a cos t, b sin t) with unit tangents.

    Returns
    -------
        (PointCloud, oriented analytic FrameField)

    """
    if a <= 0.0 or b <= 0.0 or n < 1:
        msg = f"Ellipse needs a, b > 0 and n >= 1, got a={a}, b={b}, n={n}"
        raise ParameterError(msg)
    t = 2.0 * math.pi * np.arange(n) / n
    points = np.column_stack((a * np.cos(t), b * np.sin(t)))
    tangents = np.column_stack((-a * np.sin(t), b * np.cos(t)))
    tangents /= np.linalg.norm(tangents, axis=1, keepdims=True)
    cloud = PointCloud(points, intrinsic_dim=1)
    field = FrameField(tangents[:, :, np.newaxis], oriented=True, provenance=Provenance.ANALYTIC, cloud=cloud)
    return cloud, field


def mobius_point(R: float, t: np.ndarray, s: np.ndarray) -> np.ndarray:
    """((R + s cos(t/2)) cos t, (R + s cos(t/2)) sin t, s sin(t/2))."""
    radius = R + s * np.cos(t / 2.0)
    return np.stack((radius * np.cos(t), radius * np.sin(t), s * np.sin(t / 2.0)), axis=-1)


def mobius_sample(R: float, w: float, n: int, seed: int | None = None) -> PointCloud:
    """n points with t uniform in [0, 2π) and s uniform in [-w, w]."""
    if not 0.0 < w < R:
        msg = f"Möbius band needs 0 < w < R, got R={R}, w={w}"
        raise ParameterError(msg)
    if n < 1:
        msg = f"Sample size must be positive, got {n}"
        raise ParameterError(msg)
    rng = np.random.default_rng(seed)
    t = rng.uniform(0.0, 2.0 * math.pi, n)
    s = rng.uniform(-w, w, n)
    return PointCloud(mobius_point(R, t, s), intrinsic_dim=2)
