"""Curvature, volume and radius inequalities checked on parametrized surfaces."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

import numpy as np

from ..const import CHECK_SLACK, LOG_II_SLACK, QUAD_SELF_CONSISTENCY, RICHARDSON_TOL
from ..errors import NumericsError, ParameterError
from ..generators.flows import rk4_step
from ..generators.surfaces import ParametrizedSurface, Torus, torus_geodesic
from ..models.records import Verdict

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from ..generators.surfaces import SurfaceJet

_LOGGER = logging.getLogger(__name__)

CurveKind = Literal["u-circle", "v-circle", "geodesic"]

# Below this ‖II(v, ·)‖ the logarithm is not taken.
_VANISHING_II = 1e-12
_LOG_FD_STEP = 1e-4
_MAX_REFINEMENTS = 6


def curvature_ratio(jet: SurfaceJet, direction: np.ndarray, c: float) -> float:
    """√(κ(v)² + c‖∇_v II(v,·)‖²) / (1 + c‖II(v,·)‖²) for a unit tangent v.

    Equals κ(v) at c = 0.
    """
    if c < 0.0:
        msg = f"Scale c must be nonnegative, got {c}"
        raise ParameterError(msg)
    kappa = jet.normal_curvature(direction)
    if c == 0.0:
        return kappa
    nabla = jet.nabla_second_form_norm(direction)
    second = jet.second_form_norm(direction)
    return math.sqrt(kappa**2 + c * nabla**2) / (1.0 + c * second**2)


def check_curvature_ratio_zero(jet: SurfaceJet, direction: np.ndarray) -> Verdict:
    """The ratio at c = 0 reproduces the normal curvature."""
    lhs = curvature_ratio(jet, direction, 0.0)
    rhs = jet.normal_curvature(direction)
    margin = 1e-10 - abs(lhs - rhs)
    return Verdict(
        name="curvature_ratio_zero",
        inputs={"params": list(jet.params), "direction": np.asarray(direction, dtype=float).tolist()},
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        passed=margin >= 0.0,
    )


def check_curvature_monotonicity(jet: SurfaceJet, direction: np.ndarray, c_values: Sequence[float]) -> Verdict:
    """The curvature ratio strictly decreases along an increasing c grid.

    Skipped unless κ(v)·‖II(v,·)‖ > ‖∇_v II(v,·)‖.
    """
    kappa = jet.normal_curvature(direction)
    second = jet.second_form_norm(direction)
    nabla = jet.nabla_second_form_norm(direction)
    inputs = {"params": list(jet.params), "c": [float(c) for c in c_values]}
    if kappa * second <= nabla:
        return Verdict(
            name="curvature_monotonicity",
            inputs=inputs,
            skipped=True,
            note=f"precondition κ‖II‖ > ‖∇II‖ fails: {kappa * second:.6g} <= {nabla:.6g}",
        )
    ratios = np.array([curvature_ratio(jet, direction, c) for c in sorted(c_values)])
    steps = np.diff(ratios)
    worst = float(steps.max(initial=-math.inf))
    return Verdict(
        name="curvature_monotonicity",
        inputs=inputs,
        lhs=worst,
        rhs=0.0,
        margin=-worst,
        passed=bool(np.all(steps < 0.0)),
        note=f"ratio {ratios[0]:.6g} -> {ratios[-1]:.6g}",
    )


def check_curvature_closed_form(R: float, r: float, c_values: Sequence[float]) -> Verdict:
    """Along the tube circle of a torus the ratio is (1/r)/(1 + c/r²)."""
    jet = Torus(R, r).jet(0.0, 0.0)
    direction = np.array((0.0, 1.0))
    errors = [abs(curvature_ratio(jet, direction, c) - (1.0 / r) / (1.0 + c / r**2)) for c in c_values]
    worst = float(max(errors))
    return Verdict(
        name="curvature_closed_form",
        inputs={"R": R, "r": r, "c": [float(c) for c in c_values]},
        lhs=worst,
        rhs=1e-6,
        margin=1e-6 - worst,
        passed=worst <= 1e-6,
        note=f"‖∇II‖ along the tube = {jet.nabla_second_form_norm(direction):.3g}",
    )


def periodic_trapezoid(integrand: Callable[[np.ndarray, np.ndarray], np.ndarray], n: int) -> float:
    """Trapezoid rule on an n×n grid over [0, 2π)²."""
    nodes = 2.0 * math.pi * np.arange(n) / n
    u, v = np.meshgrid(nodes, nodes, indexing="ij")
    return float(np.sum(integrand(u, v)) * (2.0 * math.pi / n) ** 2)


def refine_quadrature(integrand: Callable[[np.ndarray, np.ndarray], np.ndarray], n: int) -> tuple[float, int]:
    """Double the grid until two successive values agree to 1e-8 (relative).

    Returns
    -------
        (value, final grid size)

    Raises
    ------
        NumericsError: the last two refinements still differ by more than 1e-5

    """
    previous = periodic_trapezoid(integrand, n)
    change = math.inf
    for _ in range(_MAX_REFINEMENTS):
        n *= 2
        current = periodic_trapezoid(integrand, n)
        change = abs(current - previous) / max(abs(current), 1.0)
        previous = current
        if change <= QUAD_SELF_CONSISTENCY:
            return current, n
    if change > RICHARDSON_TOL:
        msg = f"Quadrature did not converge: successive refinements differ by {change:.3g}"
        raise NumericsError(msg)
    _LOGGER.warning("Quadrature settled at relative change %.3g on a %d grid", change, n)
    return previous, n


def _metric_c(surface: ParametrizedSurface, u: np.ndarray, v: np.ndarray, c: float) -> np.ndarray:
    first = surface.first_form(u, v)
    second = surface.second_form(u, v)
    return first + c * second @ np.linalg.solve(first, second)


def check_volume_bound(surface: ParametrizedSurface, c: float, n_quad: int = 32) -> Verdict:
    """vol_c ≤ (1 + c·a²·min(d, D-d))^{d/2}·vol for a doubly periodic surface on [0, 2π)².

    a = sup ‖II‖₂ is taken over the final quadrature grid.
    """
    if c < 0.0:
        msg = f"Scale c must be nonnegative, got {c}"
        raise ParameterError(msg)
    d, D = surface.plane_dim, surface.ambient_dim
    vol, _ = refine_quadrature(lambda u, v: np.sqrt(np.linalg.det(surface.first_form(u, v))), n_quad)
    vol_c, n_final = refine_quadrature(lambda u, v: np.sqrt(np.linalg.det(_metric_c(surface, u, v, c))), n_quad)
    nodes = 2.0 * math.pi * np.arange(n_final) / n_final
    u, v = np.meshgrid(nodes, nodes, indexing="ij")
    a = float(np.max(np.abs(np.linalg.eigvalsh(surface.shape_components(u, v)))))
    bound = (1.0 + c * a**2 * min(d, D - d)) ** (d / 2) * vol
    return Verdict(
        name="volume_bound",
        inputs={"surface": repr(surface), "c": c, "n_quad": n_quad},
        lhs=vol_c,
        rhs=bound,
        margin=bound - vol_c,
        passed=vol_c <= bound * (1.0 + CHECK_SLACK),
        note=f"vol = {vol:.12g}, a = {a:.6g}, grid {n_final}",
    )


@dataclass(frozen=True)
class RadiusBound:
    """Homotopy-radius bound with ‖II_c‖₂ (statement) and ‖II_c‖₂² (proof) in the arctan."""

    statement: float
    proof: float

    @property
    def discrepancy(self) -> float:
        """|statement - proof|."""
        return abs(self.statement - self.proof)


def homotopy_radius_bound(c: float, ii_c_norm: float, L_prime_c: float) -> RadiusBound:
    """min(√(c/2)·arctan √(2/(c·‖II_c‖₂^p)), √c·π/2, L'_c) for p = 1 and p = 2.

    Raises
    ------
        ParameterError: any input is nonpositive

    """
    if min(c, ii_c_norm, L_prime_c) <= 0.0:
        msg = f"Radius bound needs positive inputs, got c={c}, ‖II_c‖={ii_c_norm}, L'_c={L_prime_c}"
        raise ParameterError(msg)
    tube = math.sqrt(c) * math.pi / 2.0

    def first_term(power: int) -> float:
        return math.sqrt(c / 2.0) * math.atan(math.sqrt(2.0 / (c * ii_c_norm**power)))

    return RadiusBound(
        statement=min(first_term(1), tube, L_prime_c),
        proof=min(first_term(2), tube, L_prime_c),
    )


def _curve_states(torus: Torus, kind: CurveKind, samples: int) -> np.ndarray:
    """Unit-speed states (u, v, u', v') along one curve on the torus."""
    if kind == "u-circle":
        v = math.pi / 4.0
        rho = torus.R + torus.r * math.cos(v)
        t = 2.0 * math.pi * rho * np.arange(samples) / samples
        return np.column_stack((t / rho, np.full(samples, v), np.full(samples, 1.0 / rho), np.zeros(samples)))
    if kind == "v-circle":
        t = 2.0 * math.pi * torus.r * np.arange(samples) / samples
        return np.column_stack((np.zeros(samples), t / torus.r, np.zeros(samples), np.full(samples, 1.0 / torus.r)))
    if kind == "geodesic":
        times = np.linspace(0.0, 2.0 * math.pi * torus.R, samples)
        return torus_geodesic(torus, (0.0, 0.3), 0.7, times)
    msg = f"Unknown curve {kind!r}"
    raise ParameterError(msg)


def _advance(torus: Torus, kind: CurveKind, state: np.ndarray, dt: float) -> np.ndarray:
    """Move a state by dt along its curve; the u-circle is not a geodesic off v = 0, π."""
    if kind == "u-circle":
        return state + dt * np.array((state[2], 0.0, 0.0, 0.0))
    return rk4_step(torus.geodesic_rhs, 0.0, state, dt)


def _second_form_norm(torus: Torus, state: np.ndarray) -> float:
    u, v, du, dv = state
    shape = torus.shape_components(np.array(u), np.array(v))
    w = np.array(((torus.R + torus.r * math.cos(v)) * du, torus.r * dv))
    return float(np.linalg.norm(shape @ w))


def check_log_ii_bound(torus: Torus, kind: CurveKind, samples: int = 200) -> Verdict:
    """|d/dt log‖II(γ',·)‖| ≤ ‖∇_γ' II(γ',·)‖ / ‖II(γ',·)‖ + 1e-5 along a curve.

    The derivative is a central difference with step 1e-4 over the flow
    of the curve started at each sample.
    """
    states = _curve_states(torus, kind, samples)
    inputs = {"R": torus.R, "r": torus.r, "curve": kind, "samples": samples}
    h = _LOG_FD_STEP
    worst_margin, worst_lhs, worst_rhs = math.inf, 0.0, 0.0
    for state in states:
        norm = _second_form_norm(torus, state)
        if norm < _VANISHING_II:
            return Verdict(name=f"log_ii_bound[{kind}]", inputs=inputs, skipped=True, note="II(γ',·) vanishes on the curve")
        forward, backward = _advance(torus, kind, state, h), _advance(torus, kind, state, -h)
        lhs = abs(math.log(_second_form_norm(torus, forward)) - math.log(_second_form_norm(torus, backward))) / (2.0 * h)
        u, v, du, dv = state
        jet = torus.jet(u, v)
        direction = np.array(((torus.R + torus.r * math.cos(v)) * du, torus.r * dv))
        rhs = jet.nabla_second_form_norm(direction) / jet.second_form_norm(direction)
        margin = rhs + LOG_II_SLACK - lhs
        if margin < worst_margin:
            worst_margin, worst_lhs, worst_rhs = margin, lhs, rhs
    return Verdict(
        name=f"log_ii_bound[{kind}]",
        inputs=inputs,
        lhs=worst_lhs,
        rhs=worst_rhs,
        margin=worst_margin,
        passed=worst_margin >= 0.0,
    )
