"""Parametrized surfaces in ℝ³ with analytic frames and second-order jets.

Vectorized maps take parameter arrays u, v of a common shape and return
arrays with the geometric axes last: positions (..., 3), Jacobians
(..., 3, 2), Hessians (..., 3, 2, 2).
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

import numpy as np

from ..const import FD_STEP
from ..errors import DimensionError, ParameterError
from ..models.cloud import PointCloud
from ..models.frame import FrameField, Provenance
from .flows import rk4_integrate

if TYPE_CHECKING:
    from collections.abc import Callable

_LOGGER = logging.getLogger(__name__)

SamplingMode = Literal["grid", "uniform"]


@dataclass(frozen=True, eq=False)
class SurfaceJet:
    """Second-order geometry of a surface at one parameter point.

    first_form, second_form and second_form_fd are coordinate matrices in
    (∂u, ∂v). shape_components are II(e_b, e_c) and nabla_second_form is
    (∇_{e_a} II)(e_b, e_c), both in the orthonormal frame e = frame.
    """

    params: tuple[float, float]
    position: np.ndarray
    frame: np.ndarray
    normal: np.ndarray
    first_form: np.ndarray
    second_form: np.ndarray
    second_form_fd: np.ndarray
    shape_components: np.ndarray
    nabla_second_form: np.ndarray

    def tangent_coordinates(self, direction: np.ndarray) -> np.ndarray:
        """Coordinates of a tangent vector in the orthonormal frame.

        Accepts frame coordinates (length 2) or an ambient vector (length 3).
        """
        direction = np.asarray(direction, dtype=np.float64)
        if direction.shape == (self.frame.shape[1],):
            return direction
        if direction.shape == (self.frame.shape[0],):
            return self.frame.T @ direction
        msg = f"Tangent vector of shape {direction.shape} does not fit a {self.frame.shape} frame"
        raise DimensionError(msg)

    def normal_curvature(self, direction: np.ndarray) -> float:
        """κ(v) = |II(v, v)| for a unit tangent v."""
        w = self.tangent_coordinates(direction)
        return abs(float(w @ self.shape_components @ w))

    def second_form_norm(self, direction: np.ndarray) -> float:
        """‖II(v, ·)‖_HS."""
        return float(np.linalg.norm(self.shape_components @ self.tangent_coordinates(direction)))

    def nabla_second_form_norm(self, direction: np.ndarray) -> float:
        """‖(∇_v II)(v, ·)‖_HS."""
        w = self.tangent_coordinates(direction)
        return float(np.linalg.norm(np.einsum("a,b,abc->c", w, w, self.nabla_second_form)))

    def operator_norm(self) -> float:
        """‖II‖₂, the largest absolute principal curvature."""
        return float(np.max(np.abs(np.linalg.eigvalsh(self.shape_components))))

    def metric_c(self, c: float) -> np.ndarray:
        """[g_c] = [g] + c·[II][g]⁻¹[II] in coordinates."""
        ii = self.second_form
        return self.first_form + c * ii @ np.linalg.solve(self.first_form, ii)


def _cross_normal(frames: np.ndarray) -> np.ndarray:
    normal = np.cross(frames[..., 0], frames[..., 1])
    return normal / np.linalg.norm(normal, axis=-1, keepdims=True)


def _gram_schmidt(jacobian: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orientation-preserving orthonormalization of two columns.

    Returns
    -------
        (frames with frame = J·M, the 2×2 upper-triangular M)

    """
    first, second = jacobian[..., 0], jacobian[..., 1]
    norm_first = np.linalg.norm(first, axis=-1)
    e1 = first / norm_first[..., None]
    projection = np.sum(second * e1, axis=-1)
    rest = second - projection[..., None] * e1
    norm_rest = np.linalg.norm(rest, axis=-1)
    if np.any(norm_first == 0.0) or np.any(norm_rest == 0.0):
        msg = "Surface parametrization is singular"
        raise ParameterError(msg)
    e2 = rest / norm_rest[..., None]
    frames = np.stack((e1, e2), axis=-1)
    inverse = np.zeros((*norm_first.shape, 2, 2))
    inverse[..., 0, 0] = 1.0 / norm_first
    inverse[..., 0, 1] = -projection / (norm_first * norm_rest)
    inverse[..., 1, 1] = 1.0 / norm_rest
    return frames, inverse


class ParametrizedSurface(ABC):
    """A smooth map (u, v) ↦ ℝ³."""

    ambient_dim = 3
    plane_dim = 2

    @abstractmethod
    def position(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Surface point."""

    @abstractmethod
    def jacobian(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Columns ∂u, ∂v."""

    def hessian(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Second derivatives [..., :, i, j] = ∂i∂j, by central differences of the Jacobian."""
        u, v = np.asarray(u, dtype=np.float64), np.asarray(v, dtype=np.float64)
        h = FD_STEP
        d_u = (self.jacobian(u + h, v) - self.jacobian(u - h, v)) / (2.0 * h)
        d_v = (self.jacobian(u, v + h) - self.jacobian(u, v - h)) / (2.0 * h)
        hessian = np.stack((d_u, d_v), axis=-1)
        return (hessian + np.swapaxes(hessian, -1, -2)) / 2.0

    def frames(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Orthonormalized (∂u, ∂v), same orientation."""
        return _gram_schmidt(self.jacobian(u, v))[0]

    def normal(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Unit normal e_u × e_v."""
        return _cross_normal(self.frames(u, v))

    def first_form(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[g] = JᵀJ."""
        jacobian = self.jacobian(u, v)
        return np.einsum("...ai,...aj->...ij", jacobian, jacobian)

    def second_form(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[II]_ij = ⟨∂i∂j X, ν⟩."""
        return np.einsum("...aij,...a->...ij", self.hessian(u, v), self.normal(u, v))

    def second_form_fd(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[II] from central differences of the Jacobian, step 1e-5."""
        return np.einsum("...aij,...a->...ij", ParametrizedSurface.hessian(self, u, v), self.normal(u, v))

    def shape_components(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """II(e_b, e_c) in the orthonormal frame."""
        _, inverse = _gram_schmidt(self.jacobian(u, v))
        return np.einsum("...ib,...ij,...jc->...bc", inverse, self.second_form(u, v), inverse)

    def jet(self, u: float, v: float) -> SurfaceJet:
        """Second-order jet at (u, v) with ∇II by central differences.

        (∇_{e_a} h)_{bc} = e_a(h_bc) - Σ_m ω_mb h_mc - Σ_m ω_mc h_bm with
        ω_mb = ⟨D_{e_a} e_b, e_m⟩, all derivatives taken along the
        parameter direction of e_a with step 1e-5.
        """
        u, v = float(u), float(v)
        frames, inverse = _gram_schmidt(self.jacobian(np.array(u), np.array(v)))
        shape = self.shape_components(np.array(u), np.array(v))
        h = FD_STEP
        nabla = np.empty((2, 2, 2))
        for a in range(2):
            du, dv = h * inverse[0, a], h * inverse[1, a]
            plus = (np.array(u + du), np.array(v + dv))
            minus = (np.array(u - du), np.array(v - dv))
            d_frame = (self.frames(*plus) - self.frames(*minus)) / (2.0 * h)
            d_shape = (self.shape_components(*plus) - self.shape_components(*minus)) / (2.0 * h)
            omega = frames.T @ d_frame
            nabla[a] = d_shape - omega.T @ shape - shape @ omega
        return SurfaceJet(
            params=(u, v),
            position=self.position(np.array(u), np.array(v)),
            frame=frames,
            normal=_cross_normal(frames),
            first_form=self.first_form(np.array(u), np.array(v)),
            second_form=self.second_form(np.array(u), np.array(v)),
            second_form_fd=self.second_form_fd(np.array(u), np.array(v)),
            shape_components=shape,
            nabla_second_form=nabla,
        )

    def sample(self, params: np.ndarray) -> tuple[PointCloud, FrameField]:
        """Points and oriented analytic frames at an (n, 2) parameter array."""
        params = np.asarray(params, dtype=np.float64).reshape(-1, 2)
        u, v = params[:, 0], params[:, 1]
        cloud = PointCloud(self.position(u, v), intrinsic_dim=self.plane_dim)
        field = FrameField(self.frames(u, v), oriented=True, provenance=Provenance.ANALYTIC, cloud=cloud)
        return cloud, field


class Torus(ParametrizedSurface):
    """((R + r cos v) cos u, (R + r cos v) sin u, r sin v) with 0 < r < R."""

    def __init__(self, R: float, r: float) -> None:
        """Initialize the radii."""
        if not 0.0 < r < R:
            msg = f"Torus radii need 0 < r < R, got R={R}, r={r}"
            raise ParameterError(msg)
        self.R = float(R)
        self.r = float(r)

    def __repr__(self) -> str:
        """Represent the torus."""
        return f"Torus(R={self.R}, r={self.r})"

    def _rho(self, v: np.ndarray) -> np.ndarray:
        return self.R + self.r * np.cos(v)

    def position(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Surface point."""
        rho = self._rho(v)
        return np.stack((rho * np.cos(u), rho * np.sin(u), self.r * np.sin(v) * np.ones_like(u)), axis=-1)

    def jacobian(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Columns ∂u, ∂v."""
        rho = self._rho(v)
        d_u = np.stack((-rho * np.sin(u), rho * np.cos(u), np.zeros_like(rho * u)), axis=-1)
        d_v = np.stack(
            (-self.r * np.sin(v) * np.cos(u), -self.r * np.sin(v) * np.sin(u), self.r * np.cos(v) * np.ones_like(u)),
            axis=-1,
        )
        return np.stack((d_u, d_v), axis=-1)

    def hessian(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Analytic second derivatives."""
        rho = self._rho(v)
        cu, su, cv, sv = np.cos(u), np.sin(u), np.cos(v), np.sin(v)
        zero = np.zeros_like(rho * u)
        d_uu = np.stack((-rho * cu, -rho * su, zero), axis=-1)
        d_uv = np.stack((self.r * sv * su, -self.r * sv * cu, zero), axis=-1)
        d_vv = np.stack((-self.r * cv * cu, -self.r * cv * su, -self.r * sv * np.ones_like(u)), axis=-1)
        row_u = np.stack((d_uu, d_uv), axis=-1)
        row_v = np.stack((d_uv, d_vv), axis=-1)
        return np.stack((row_u, row_v), axis=-1)

    def first_form(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[g] = diag((R + r cos v)², r²)."""
        rho = self._rho(np.asarray(v, dtype=np.float64)) * np.ones_like(u)
        form = np.zeros((*rho.shape, 2, 2))
        form[..., 0, 0] = rho**2
        form[..., 1, 1] = self.r**2
        return form

    def second_form(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[II] = diag(-(R + r cos v) cos v, -r) against the outward normal."""
        v = np.asarray(v, dtype=np.float64) * np.ones_like(u)
        form = np.zeros((*v.shape, 2, 2))
        form[..., 0, 0] = -self._rho(v) * np.cos(v)
        form[..., 1, 1] = -self.r
        return form

    def area(self) -> float:
        """4π²Rr."""
        return 4.0 * math.pi**2 * self.R * self.r

    def geodesic_rhs(self, _t: float, state: np.ndarray) -> np.ndarray:
        """Geodesic equations for the state (u, v, u', v')."""
        _, v, du, dv = state
        rho = self.R + self.r * math.cos(v)
        return np.array(
            (
                du,
                dv,
                2.0 * self.r * math.sin(v) / rho * du * dv,
                -rho * math.sin(v) / self.r * du * du,
            )
        )

    def unit_velocity(self, v: float, angle: float) -> np.ndarray:
        """Parameter velocity (u', v') of unit speed making the given angle with e_u."""
        return np.array((math.cos(angle) / (self.R + self.r * math.cos(v)), math.sin(angle) / self.r))


@dataclass(frozen=True, eq=False)
class TorusSample:
    """Points on a torus with their parameters and analytic frames."""

    cloud: PointCloud
    field: FrameField
    params: np.ndarray
    surface: Torus

    def jet(self, index: int) -> SurfaceJet:
        """Second-order jet at a sample point."""
        u, v = self.params[index]
        return self.surface.jet(u, v)


def torus_grid_params(n_u: int, n_v: int) -> np.ndarray:
    """Equispaced (u, v) grid, u varying slowest."""
    u = 2.0 * math.pi * np.arange(n_u) / n_u
    v = 2.0 * math.pi * np.arange(n_v) / n_v
    uu, vv = np.meshgrid(u, v, indexing="ij")
    return np.column_stack((uu.ravel(), vv.ravel()))


def torus_uniform_params(R: float, r: float, n: int, seed: int | None) -> np.ndarray:
    """Area-uniform parameters: rejection with acceptance (R + r cos v)/(R + r)."""
    rng = np.random.default_rng(seed)
    accepted: list[np.ndarray] = []
    count = 0
    while count < n:
        batch = max(2 * (n - count), 64)
        u = rng.uniform(0.0, 2.0 * math.pi, batch)
        v = rng.uniform(0.0, 2.0 * math.pi, batch)
        keep = rng.uniform(0.0, 1.0, batch) * (R + r) <= R + r * np.cos(v)
        accepted.append(np.column_stack((u[keep], v[keep])))
        count += int(keep.sum())
    return np.concatenate(accepted)[:n]


def torus_sample(
    R: float,
    r: float,
    n: int,
    seed: int | None = None,
    mode: SamplingMode = "grid",
    *,
    grid_shape: tuple[int, int] | None = None,
) -> TorusSample:
    """Sample a torus with analytic frames.

    Args:
    ----
        R: center-line radius
        r: tube radius, 0 < r < R
        n: number of points; the grid mode rounds down to a full grid
        seed: random seed for the uniform mode
        mode: "grid" or "uniform" (area-weighted)
        grid_shape: explicit (n_u, n_v) for the grid mode

    Returns:
    -------
        TorusSample

    """
    surface = Torus(R, r)
    if n < 1:
        msg = f"Sample size must be positive, got {n}"
        raise ParameterError(msg)
    if mode == "grid":
        if grid_shape is None:
            n_v = max(3, round(math.sqrt(n * r / R)))
            grid_shape = (max(3, n // n_v), n_v)
        params = torus_grid_params(*grid_shape)
    elif mode == "uniform":
        params = torus_uniform_params(R, r, n, seed)
    else:
        msg = f"Unknown sampling mode {mode!r}"
        raise ParameterError(msg)
    cloud, field = surface.sample(params)
    _LOGGER.debug("Sampled %d torus points (%s, R=%g, r=%g)", cloud.n, mode, R, r)
    return TorusSample(cloud=cloud, field=field, params=params, surface=surface)


class PerturbedSurface(ParametrizedSurface):
    """Embedding q ↦ q + δ·s(q) of a base surface."""

    def __init__(
        self,
        base: ParametrizedSurface,
        displacement: Callable[[np.ndarray, np.ndarray], np.ndarray],
        delta: float,
    ) -> None:
        """Initialize with a displacement field given in parameters."""
        self.base = base
        self.displacement = displacement
        self.delta = float(delta)

    def position(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Displaced point."""
        return self.base.position(u, v) + self.delta * self.displacement(u, v)

    def jacobian(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Base Jacobian plus δ times the displacement Jacobian (central differences)."""
        u, v = np.asarray(u, dtype=np.float64), np.asarray(v, dtype=np.float64)
        h = FD_STEP
        d_u = (self.displacement(u + h, v) - self.displacement(u - h, v)) / (2.0 * h)
        d_v = (self.displacement(u, v + h) - self.displacement(u, v - h)) / (2.0 * h)
        return self.base.jacobian(u, v) + self.delta * np.stack((d_u, d_v), axis=-1)


def torus_geodesic(
    surface: Torus,
    start: tuple[float, float],
    angle: float,
    times: np.ndarray,
    *,
    h: float = 1e-3,
) -> np.ndarray:
    """Unit-speed geodesic states (u, v, u', v') at the given times."""
    u0, v0 = start
    state = np.concatenate(((u0, v0), surface.unit_velocity(v0, angle)))
    return rk4_integrate(surface.geodesic_rhs, state, np.asarray(times, dtype=np.float64), h)


DisplacementKind = Literal["normal", "constant"]


def perturbed_torus(
    R: float,
    r: float,
    grid_shape: tuple[int, int],
    delta: float,
    kind: DisplacementKind = "normal",
) -> tuple[PointCloud, FrameField]:
    """Grid sample of the torus displaced by δ along the unit normal or a fixed vector.

    Frames come from the perturbed Jacobian, so they stay tangent to the
    displaced surface.
    """
    torus = Torus(R, r)
    if kind == "normal":
        displacement = torus.normal
    elif kind == "constant":
        direction = np.array((1.0, 2.0, 2.0)) / 3.0

        def displacement(u: np.ndarray, _v: np.ndarray) -> np.ndarray:
            return np.broadcast_to(direction, (*np.shape(u), 3))

    else:
        msg = f"Unknown displacement field {kind!r}"
        raise ParameterError(msg)
    return PerturbedSurface(torus, displacement, delta).sample(torus_grid_params(*grid_shape))
