"""Sliding-window delay embedding of scalar time series."""

from __future__ import annotations

import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import ParameterError
from ..models.cloud import PointCloud

_LOGGER = logging.getLogger(__name__)


def delay_steps(tau_time: float, spacing: float) -> int:
    """Convert a delay in time units to a whole number of samples."""
    if tau_time <= 0.0 or spacing <= 0.0:
        msg = f"Delay and sample spacing must be positive, got {tau_time} and {spacing}"
        raise ParameterError(msg)
    return max(1, round(tau_time / spacing))


def delay_embed(series: np.ndarray, tau_steps: int, m: int, *, intrinsic_dim: int = 1) -> PointCloud:
    """Points (f(t), f(t + τ), …, f(t + (m-1)τ)) in ℝᵐ.

    Args:
    ----
        series: scalar samples
        tau_steps: delay in samples
        m: embedding dimension
        intrinsic_dim: declared dimension of the reconstructed manifold

    Returns:
    -------
        PointCloud with len(series) - (m-1)·τ points

    """
    series = np.asarray(series, dtype=np.float64).ravel()
    if tau_steps < 1 or m < 1:
        msg = f"Delay and dimension must be positive, got τ={tau_steps}, m={m}"
        raise ParameterError(msg)
    span = (m - 1) * tau_steps + 1
    if series.size < span:
        msg = f"Series of length {series.size} is shorter than the window span {span}"
        raise ParameterError(msg)
    windows = sliding_window_view(series, span)[:, ::tau_steps]
    _LOGGER.debug("Delay embedding: %d windows in ℝ^%d (τ=%d)", windows.shape[0], m, tau_steps)
    return PointCloud(np.ascontiguousarray(windows), intrinsic_dim=min(intrinsic_dim, m))
