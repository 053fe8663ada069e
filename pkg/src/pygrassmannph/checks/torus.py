"""Closed-form torus quantities: d_c volume, bottleneck, systole bound and their ratios."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import integrate

from ..const import CHECK_SLACK, QUAD_EPSREL, QUAD_SELF_CONSISTENCY
from ..errors import NumericsError, ParameterError
from ..generators.surfaces import Torus
from ..models.records import Verdict
from ..pipeline.metric import dc_distance

if TYPE_CHECKING:
    from collections.abc import Sequence

_LOGGER = logging.getLogger(__name__)

SYSTOLE_RATIO_LIMIT = 2.0 * math.pi / (2.0 * math.pi + 4.0)
BOTTLENECK_RATIO_LIMIT = 1.0 / (2.0 * math.pi * (2.0 * math.pi + 4.0))
RATIO_TOL = 5e-3


@dataclass(frozen=True)
class TorusQuantities:
    """d_c invariants of the torus ((R + r cos v) cos u, (R + r cos v) sin u, r sin v).

    The ratios divide by the closed-form upper bound on vol_c; the *_exact
    variants divide by the quadrature value.
    """

    R: float
    r: float
    c: float
    vol: float
    vol_c: float
    vol_c_upper: float
    bottleneck: float
    sys_lower: float
    sys_bound_valid: bool

    @property
    def sys_ratio(self) -> float:
        """sys_c² / vol_c upper bound."""
        return self.sys_lower**2 / self.vol_c_upper

    @property
    def bottleneck_ratio(self) -> float:
        """L_c² / vol_c upper bound."""
        return self.bottleneck**2 / self.vol_c_upper

    @property
    def sys_ratio_exact(self) -> float:
        """sys_c² / vol_c."""
        return self.sys_lower**2 / self.vol_c

    @property
    def bottleneck_ratio_exact(self) -> float:
        """L_c² / vol_c."""
        return self.bottleneck**2 / self.vol_c


def torus_vol_c(R: float, r: float, c: float) -> float:
    """2π√(r² + c)·∫₀^{2π} √((R + r cos v)² + c cos² v) dv.

    Adaptive quadrature (relative 1e-8 cross-check against the periodic
    trapezoid rule).

    Raises
    ------
        NumericsError: the two quadratures disagree

    """

    def integrand(v: float | np.ndarray) -> float | np.ndarray:
        return np.sqrt((R + r * np.cos(v)) ** 2 + c * np.cos(v) ** 2)

    value, _ = integrate.quad(integrand, 0.0, 2.0 * math.pi, epsrel=QUAD_EPSREL, limit=200)
    nodes = 2.0 * math.pi * np.arange(512) / 512
    trapezoid = float(np.sum(integrand(nodes)) * 2.0 * math.pi / 512)
    if abs(value - trapezoid) > QUAD_SELF_CONSISTENCY * abs(value):
        msg = f"vol_c quadratures disagree: quad {value!r}, trapezoid {trapezoid!r}"
        raise NumericsError(msg)
    return 2.0 * math.pi * math.sqrt(r * r + c) * value


def torus_quantities(R: float, r: float, c: float) -> TorusQuantities:
    """vol, vol_c, its upper bound 2π√(r² + c)(2πR + 4√c), L_c and the systole bound 2π(R - r).

    The systole bound is derived for c = (R - r)²; sys_bound_valid reports
    whether c matches.
    """
    if not 0.0 < r < R:
        msg = f"Torus needs 0 < r < R, got R={R}, r={r}"
        raise ParameterError(msg)
    if c < 0.0:
        msg = f"Scale c must be nonnegative, got {c}"
        raise ParameterError(msg)
    quantities = TorusQuantities(
        R=R,
        r=r,
        c=c,
        vol=4.0 * math.pi**2 * R * r,
        vol_c=torus_vol_c(R, r, c),
        vol_c_upper=2.0 * math.pi * math.sqrt(r * r + c) * (2.0 * math.pi * R + 4.0 * math.sqrt(c)),
        bottleneck=min(0.5 * math.sqrt(4.0 * r * r + c * math.pi**2), R),
        sys_lower=2.0 * math.pi * (R - r),
        sys_bound_valid=math.isclose(c, (R - r) ** 2, rel_tol=1e-12),
    )
    _LOGGER.debug("Torus R=%g r=%g c=%g: vol_c=%.12g, L_c=%.6g", R, r, c, quantities.vol_c, quantities.bottleneck)
    return quantities


def check_torus_ratios(R: float, r: float) -> list[Verdict]:
    """sys_c²/vol_c and L_c²/vol_c at c = (R - r)² against their thin-torus limits."""
    quantities = torus_quantities(R, r, (R - r) ** 2)
    inputs = {"R": R, "r": r, "c": quantities.c}
    verdicts = [
        Verdict(
            name="vol_c_upper_bound",
            inputs=inputs,
            lhs=quantities.vol_c,
            rhs=quantities.vol_c_upper,
            margin=quantities.vol_c_upper - quantities.vol_c,
            passed=quantities.vol_c <= quantities.vol_c_upper * (1.0 + CHECK_SLACK),
        )
    ]
    for name, value, limit, exact in (
        ("systole_ratio", quantities.sys_ratio, SYSTOLE_RATIO_LIMIT, quantities.sys_ratio_exact),
        ("bottleneck_ratio", quantities.bottleneck_ratio, BOTTLENECK_RATIO_LIMIT, quantities.bottleneck_ratio_exact),
    ):
        gap = abs(value - limit)
        verdicts.append(
            Verdict(
                name=name,
                inputs=inputs,
                lhs=value,
                rhs=limit,
                margin=RATIO_TOL - gap,
                passed=gap <= RATIO_TOL,
                note=f"with exact vol_c: {exact:.6g}",
            )
        )
    return verdicts


def normalized_bottleneck_term(quantities: TorusQuantities) -> float:
    """√(4L² + cπ²) / (2·vol_c^{1/2}) with L = r."""
    return math.sqrt(4.0 * quantities.r**2 + quantities.c * math.pi**2) / (2.0 * math.sqrt(quantities.vol_c))


def check_normalized_bottleneck(R: float, r: float, c_grid: Sequence[float]) -> list[Verdict]:
    """Normalized bottleneck chain and monotonicity on a c grid inside (0, 12r²/π²].

    Per c: half the d_c distance between the outer and inner points of a
    meridian, measured on the torus frames, matches the middle term, which
    exceeds r/√vol; across the grid the middle term increases. Skipped when
    r > 1/‖II‖₂, i.e. R < 2r.
    """
    inputs = {"R": R, "r": r}
    if R < 2.0 * r:
        note = f"precondition r <= 1/‖II‖₂ fails: r={r}, 1/‖II‖₂={min(r, R - r)}"
        return [Verdict(name="normalized_bottleneck", inputs=inputs, skipped=True, note=note)]
    upper = 12.0 * r * r / math.pi**2
    grid = sorted(float(c) for c in c_grid)
    if not grid or grid[0] <= 0.0 or grid[-1] > upper * (1.0 + CHECK_SLACK):
        msg = f"c grid must lie in (0, {upper:.6g}]"
        raise ParameterError(msg)
    euclidean = r / math.sqrt(4.0 * math.pi**2 * R * r)
    torus = Torus(R, r)
    outer, inner = np.array(0.0), np.array(math.pi)
    ends = (torus.position(outer, outer), torus.position(outer, inner), torus.frames(outer, outer), torus.frames(outer, inner))
    verdicts = []
    previous = None
    for c in grid:
        quantities = torus_quantities(R, r, c)
        middle = normalized_bottleneck_term(quantities)
        lhs = 0.5 * dc_distance(*ends, c) / math.sqrt(quantities.vol_c)
        verdicts.append(
            Verdict(
                name="normalized_bottleneck_chain",
                inputs={**inputs, "c": c},
                lhs=lhs,
                rhs=middle,
                margin=CHECK_SLACK * middle - abs(lhs - middle),
                passed=abs(lhs - middle) <= CHECK_SLACK * middle,
            )
        )
        verdicts.append(
            Verdict(
                name="normalized_bottleneck_improvement",
                inputs={**inputs, "c": c},
                lhs=middle,
                rhs=euclidean,
                margin=middle - euclidean,
                passed=middle > euclidean,
            )
        )
        if previous is not None:
            verdicts.append(
                Verdict(
                    name="normalized_bottleneck_monotone",
                    inputs={**inputs, "c": c},
                    lhs=middle,
                    rhs=previous,
                    margin=middle - previous,
                    passed=middle > previous,
                )
            )
        previous = middle
    return verdicts
