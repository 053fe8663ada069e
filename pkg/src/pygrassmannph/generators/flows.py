"""Fixed-step Runge-Kutta integration and the double-gyre flow."""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from ..const import BOX_TOL, DOUBLE_GYRE_BOX
from ..errors import IntegrationWarning, ParameterError

if TYPE_CHECKING:
    from collections.abc import Callable

    from ..models.records import TrajectoryConfig

_LOGGER = logging.getLogger(__name__)


def rk4_step(rhs: Callable[[float, np.ndarray], np.ndarray], t: float, y: np.ndarray, h: float) -> np.ndarray:
    """One classical fourth-order Runge-Kutta step."""
    k1 = rhs(t, y)
    k2 = rhs(t + h / 2.0, y + h / 2.0 * k1)
    k3 = rhs(t + h / 2.0, y + h / 2.0 * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_integrate(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    y0: np.ndarray,
    times: np.ndarray,
    h: float,
) -> np.ndarray:
    """States at the given increasing times.

    Each interval between sample times is split into ceil(Δ/h) equal
    steps, so the step never exceeds h and lands on every sample time.

    Returns
    -------
        (len(times), len(y0)) array, first row y0

    """
    if h <= 0.0:
        msg = f"Integrator step must be positive, got {h}"
        raise ParameterError(msg)
    times = np.asarray(times, dtype=np.float64)
    states = np.empty((times.size, np.size(y0)))
    y = np.asarray(y0, dtype=np.float64).copy()
    states[0] = y
    for index in range(1, times.size):
        t0, t1 = float(times[index - 1]), float(times[index])
        steps = max(1, math.ceil((t1 - t0) / h - 1e-9))
        step = (t1 - t0) / steps
        for s in range(steps):
            y = rk4_step(rhs, t0 + s * step, y, step)
        states[index] = y
    return states


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled trajectory (t, x(t), y(t))."""

    times: np.ndarray
    x: np.ndarray
    y: np.ndarray

    def __len__(self) -> int:
        """Return the number of samples."""
        return int(self.times.size)

    @property
    def spacing(self) -> float:
        """Time between consecutive samples."""
        return float(self.times[1] - self.times[0]) if self.times.size > 1 else 0.0


def double_gyre_velocity(cfg: TrajectoryConfig) -> Callable[[float, np.ndarray], np.ndarray]:
    """Velocity of the stream function φ = C sin(π f(x, t)) sin(π y).

    f(x, t) = a(t)x² + b(t)x with a = η sin(ωt), b = 1 - 2η sin(ωt);
    ẋ = -∂φ/∂y, ẏ = ∂φ/∂x.
    """
    amplitude, eta, omega = cfg.amplitude, cfg.eta, cfg.omega

    def velocity(t: float, state: np.ndarray) -> np.ndarray:
        x, y = state
        a = eta * math.sin(omega * t)
        b = 1.0 - 2.0 * a
        f = a * x * x + b * x
        return np.array(
            (
                -math.pi * amplitude * math.sin(math.pi * f) * math.cos(math.pi * y),
                math.pi * amplitude * math.cos(math.pi * f) * math.sin(math.pi * y) * (2.0 * a * x + b),
            )
        )

    return velocity


def double_gyre_trajectory(cfg: TrajectoryConfig) -> Trajectory:
    """Integrate the double gyre with fixed-step RK4, n samples on [0, T].

    Warns with IntegrationWarning when the state leaves [0, 2]×[0, 1] by
    more than 1e-6.
    """
    width, height = DOUBLE_GYRE_BOX
    if not (0.0 <= cfg.x0 <= width and 0.0 <= cfg.y0 <= height):
        msg = f"Initial point ({cfg.x0}, {cfg.y0}) is outside [0, {width}]×[0, {height}]"
        raise ParameterError(msg)
    times = np.linspace(0.0, cfg.horizon, cfg.n)
    _LOGGER.debug("Integrating double gyre: T=%g, n=%d, h=%g", cfg.horizon, cfg.n, cfg.h)
    states = rk4_integrate(double_gyre_velocity(cfg), np.array((cfg.x0, cfg.y0)), times, cfg.h)
    x, y = states[:, 0], states[:, 1]
    outside = (x < -BOX_TOL) | (x > width + BOX_TOL) | (y < -BOX_TOL) | (y > height + BOX_TOL)
    if np.any(outside):
        first = int(np.flatnonzero(outside)[0])
        warnings.warn(
            f"Trajectory left the box at t={times[first]:g}; the step h={cfg.h} is too large",
            IntegrationWarning,
            stacklevel=2,
        )
    return Trajectory(times=times, x=x, y=y)
