"""Diagram stability under small perturbations of the embedding."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from ..generators.surfaces import perturbed_torus
from ..models.matrix import ScaleParams
from ..models.records import Verdict
from ..persistence.bottleneck import bottleneck_by_degree
from ..persistence.rips import vr_persistence
from ..pipeline.metric import choose_scale, distance_matrix

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ..generators.surfaces import DisplacementKind
    from ..models.diagram import PersistenceDiagram
    from ..persistence.rips import Engine

_LOGGER = logging.getLogger(__name__)

MONOTONE_SLACK = 1e-6
RELATIVE_DECAY = 0.05
ABSOLUTE_DECAY = 1e-3


@dataclass
class StabilityRow:
    """Bottleneck distance per homology degree at one perturbation size."""

    delta: float
    distances: dict[int, float] = field(default_factory=dict)


def stability_experiment(  # noqa: PLR0913
    R: float,
    r: float,
    grid_shape: tuple[int, int],
    deltas: Sequence[float],
    c: float | None = None,
    kind: DisplacementKind = "normal",
    *,
    maxdim: int = 1,
    engine: Engine = "native",
) -> list[StabilityRow]:
    """d_c diagrams of a torus grid against displaced copies q ↦ q + δ·s(q).

    Args:
    ----
        R: center-line radius
        r: tube radius
        grid_shape: (n_u, n_v) sample grid
        deltas: perturbation sizes
        c: scale, chosen from the unperturbed sample when None
        kind: "normal" (unit normal field) or "constant" (rigid translation)
        maxdim: top homology degree
        engine: persistence engine

    Returns:
    -------
        one StabilityRow per delta, in the given order

    """
    cloud, frames = perturbed_torus(R, r, grid_shape, 0.0, kind)
    params = choose_scale(cloud) if c is None else ScaleParams(c=c)

    def diagrams(delta: float) -> list[PersistenceDiagram]:
        points, field_ = perturbed_torus(R, r, grid_shape, delta, kind) if delta else (cloud, frames)
        return vr_persistence(distance_matrix(points, field_, params), maxdim, engine=engine)

    base = diagrams(0.0)
    rows = []
    for delta in deltas:
        distances = bottleneck_by_degree(base, diagrams(float(delta)))
        _LOGGER.info("δ=%g: %s", delta, ", ".join(f"H{k} {v:.3g}" for k, v in distances.items()))
        rows.append(StabilityRow(delta=float(delta), distances=distances))
    return rows


def check_stability(rows: Sequence[StabilityRow]) -> list[Verdict]:
    """Per degree: distances shrink with δ and the smallest δ is near zero.

    Each value must be at most the value at the next larger δ plus 1e-6,
    and the value at the smallest δ at most 5% of the largest or 1e-3.
    """
    ordered = sorted(rows, key=lambda row: row.delta)
    degrees = sorted({degree for row in ordered for degree in row.distances})
    verdicts = []
    for degree in degrees:
        values = [row.distances.get(degree, 0.0) for row in ordered]
        steps = [larger + MONOTONE_SLACK - smaller for smaller, larger in zip(values, values[1:], strict=False)]
        monotone_margin = min(steps, default=0.0)
        verdicts.append(
            Verdict(
                name=f"stability_monotone[H{degree}]",
                inputs={"deltas": [row.delta for row in ordered]},
                lhs=values[0],
                rhs=values[-1],
                margin=monotone_margin,
                passed=monotone_margin >= 0.0,
                note=" ".join(f"{value:.3g}" for value in values),
            )
        )
        limit = max(RELATIVE_DECAY * values[-1], ABSOLUTE_DECAY)
        verdicts.append(
            Verdict(
                name=f"stability_decay[H{degree}]",
                inputs={"deltas": [row.delta for row in ordered]},
                lhs=values[0],
                rhs=limit,
                margin=limit - values[0],
                passed=values[0] <= limit,
            )
        )
    return verdicts
