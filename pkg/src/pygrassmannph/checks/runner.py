"""Registry of numerical checks and the aggregated verdict stream."""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np

from ..const import MAX_HOMOLOGY_DIM
from ..generators.surfaces import Torus
from ..geometry.grassmann import grassmann_distance, oriented_grassmann_distance, principal_angles, projector_distance
from ..models.frame import Frame
from ..models.records import Verdict
from ..persistence.oracle import brute_force_persistence
from ..persistence.rips import vr_persistence
from .stability import check_stability, stability_experiment
from .theory import (
    check_curvature_closed_form,
    check_curvature_monotonicity,
    check_curvature_ratio_zero,
    check_log_ii_bound,
    check_volume_bound,
    homotopy_radius_bound,
)
from .torus import check_normalized_bottleneck, check_torus_ratios

if TYPE_CHECKING:
    from collections.abc import Callable

_LOGGER = logging.getLogger(__name__)

IDENTITY_TOL = 1e-8


def _random_frame(rng: np.random.Generator, D: int, d: int) -> Frame:
    return Frame.orthonormalize(rng.standard_normal((D, d)))


def check_projector_identity(pairs: int = 1000, seed: int = 0) -> list[Verdict]:
    """‖P_A - P_B‖²_HS = 2Σsin²θᵢ, oriented ≥ unoriented and the triangle inequality on random frames."""
    rng = np.random.default_rng(seed)
    identity_gap = ordering_gap = triangle_gap = 0.0
    for _ in range(pairs):
        D = int(rng.integers(2, 9))
        d = int(rng.integers(1, min(4, D - 1) + 1))
        a, b, e = (_random_frame(rng, D, d) for _ in range(3))
        angles = principal_angles(a, b).angles
        identity_gap = max(identity_gap, abs(projector_distance(a, b) ** 2 - 2.0 * float(np.sum(np.sin(angles) ** 2))))
        ordering_gap = max(ordering_gap, grassmann_distance(a, b) - oriented_grassmann_distance(a, b))
        triangle_gap = max(triangle_gap, grassmann_distance(a, b) - grassmann_distance(a, e) - grassmann_distance(e, b))
    inputs = {"pairs": pairs, "seed": seed}
    return [
        Verdict(
            name="projector_identity",
            inputs=inputs,
            lhs=identity_gap,
            rhs=IDENTITY_TOL,
            margin=IDENTITY_TOL - identity_gap,
            passed=identity_gap <= IDENTITY_TOL,
        ),
        Verdict(
            name="oriented_dominates",
            inputs=inputs,
            lhs=ordering_gap,
            rhs=IDENTITY_TOL,
            margin=IDENTITY_TOL - ordering_gap,
            passed=ordering_gap <= IDENTITY_TOL,
        ),
        Verdict(
            name="grassmann_triangle",
            inputs=inputs,
            lhs=triangle_gap,
            rhs=IDENTITY_TOL,
            margin=IDENTITY_TOL - triangle_gap,
            passed=triangle_gap <= IDENTITY_TOL,
        ),
    ]


def random_distance_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    """Symmetric matrix with zero diagonal and distinct positive off-diagonal entries."""
    upper = np.triu(rng.uniform(0.1, 1.0, (n, n)), k=1)
    return upper + upper.T


def check_persistence_oracle(matrices: int = 50, seed: int = 0) -> list[Verdict]:
    """The cohomology engine matches full boundary reduction on random matrices (n ≤ 15)."""
    rng = np.random.default_rng(seed)
    mismatches = []
    for trial in range(matrices):
        n = int(rng.integers(1, 16))
        maxdim = int(rng.integers(0, MAX_HOMOLOGY_DIM + 1))
        entries = random_distance_matrix(rng, n)
        fast = vr_persistence(entries, maxdim)
        slow = brute_force_persistence(entries, maxdim)
        if not all(a.same_bars(b) for a, b in zip(fast, slow, strict=True)):
            mismatches.append(trial)
    return [
        Verdict(
            name="persistence_oracle",
            inputs={"matrices": matrices, "seed": seed},
            lhs=float(len(mismatches)),
            rhs=0.0,
            margin=-float(len(mismatches)),
            passed=not mismatches,
            note=f"mismatching trials {mismatches}" if mismatches else "",
        )
    ]


def _curvature_checks() -> list[Verdict]:
    jet = Torus(1.0, 0.25).jet(0.0, 0.0)
    tube = np.array((0.0, 1.0))
    grid = [k / 100 for k in (1, 2, 5, 10, 20, 50, 100)]
    return [
        check_curvature_ratio_zero(jet, tube),
        check_curvature_monotonicity(jet, tube, grid),
        check_curvature_closed_form(1.0, 0.25, grid),
    ]


def _volume_checks() -> list[Verdict]:
    torus = Torus(1.0, 0.25)
    return [check_volume_bound(torus, c) for c in (0.0, 0.1, (1.0 - 0.25) ** 2)]


def _bottleneck_checks() -> list[Verdict]:
    r = 0.25
    upper = 12.0 * r * r / math.pi**2
    return check_normalized_bottleneck(1.0, r, [upper * k / 20 for k in range(1, 21)])


def _log_ii_checks() -> list[Verdict]:
    torus = Torus(1.0, 0.25)
    return [check_log_ii_bound(torus, kind) for kind in ("u-circle", "v-circle", "geodesic")]


def _radius_checks() -> list[Verdict]:
    bound = homotopy_radius_bound(2.0, 1.0, 10.0)
    return [
        Verdict(
            name="homotopy_radius",
            inputs={"c": 2.0, "ii_c_norm": 1.0, "L_prime_c": 10.0},
            lhs=bound.statement,
            rhs=bound.proof,
            margin=bound.discrepancy,
            passed=math.isclose(bound.proof, math.pi / 4.0),
            note="statement uses ‖II_c‖₂, proof uses ‖II_c‖₂²",
        )
    ]


def _stability_checks() -> list[Verdict]:
    rows = stability_experiment(1.0, 0.4, (16, 8), (0.0, 0.005, 0.01, 0.02, 0.04))
    return check_stability(rows)


CHECKS: dict[str, Callable[[], list[Verdict]]] = {
    "projector_identity": check_projector_identity,
    "persistence_oracle": check_persistence_oracle,
    "curvature_ratio": _curvature_checks,
    "volume_bound": _volume_checks,
    "torus_ratios": lambda: check_torus_ratios(1.0, 1e-3),
    "normalized_bottleneck": _bottleneck_checks,
    "log_ii_bound": _log_ii_checks,
    "homotopy_radius": _radius_checks,
    "stability": _stability_checks,
}


def run_checks(name_filter: str | None = None) -> list[Verdict]:
    """Run every registered check whose name contains name_filter."""
    verdicts: list[Verdict] = []
    for name, check in CHECKS.items():
        if name_filter and name_filter not in name:
            continue
        _LOGGER.info("Running check %s", name)
        results = check()
        for verdict in results:
            _LOGGER.debug("%s %s margin=%s", verdict.status, verdict.name, verdict.margin)
        verdicts.extend(results)
    return verdicts


def summary_table(verdicts: list[Verdict]) -> str:
    """Fixed-width table of status, name, lhs, rhs and margin."""

    def cell(value: float | None) -> str:
        return "-" if value is None else f"{value:.6g}"

    width = max((len(verdict.name) for verdict in verdicts), default=4)
    lines = [f"{'STATUS':<6}  {'CHECK':<{width}}  {'LHS':>12}  {'RHS':>12}  {'MARGIN':>12}"]
    lines += [
        f"{verdict.status:<6}  {verdict.name:<{width}}  {cell(verdict.lhs):>12}  {cell(verdict.rhs):>12}  {cell(verdict.margin):>12}"
        for verdict in verdicts
    ]
    failed = sum(verdict.failed for verdict in verdicts)
    skipped = sum(verdict.skipped for verdict in verdicts)
    lines.append(f"{len(verdicts)} checks, {failed} failed, {skipped} skipped")
    return "\n".join(lines) + "\n"
