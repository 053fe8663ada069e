"""Serializable records: reports, configs, verdicts and run metadata."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from mashumaro import field_options
from mashumaro.config import BaseConfig
from mashumaro.mixins.orjson import DataClassORJSONMixin

from ..const import RK4_STEP
from ..errors import ParameterError


@dataclass
class EdgeDeterminant(DataClassORJSONMixin):
    """det(B_iᵀ B_j) on a neighbor-graph edge."""

    i: int
    j: int
    det: float

    def __str__(self) -> str:
        """Represent the edge as a text line."""
        return f"{self.i} {self.j} {self.det:.17g}"


@dataclass
class InconsistencyReport(DataClassORJSONMixin):
    """Edges on which orientation propagation could not make det(B_iᵀ B_j) > 0."""

    violations: list[EdgeDeterminant] = field(default_factory=list)
    indeterminate: list[EdgeDeterminant] = field(default_factory=list)
    flips: int = field(default=0)
    components: int = field(default=1)

    def to_text(self) -> str:
        """Text listing of violating and indeterminate edges.

        Returns
        -------
            one "i j det" line per edge, under a header per section

        """
        lines = [f"# violations {len(self.violations)}"]
        lines += [str(edge) for edge in self.violations]
        lines.append(f"# indeterminate {len(self.indeterminate)}")
        lines += [str(edge) for edge in self.indeterminate]
        return "\n".join(lines) + "\n"


@dataclass
class TrajectoryConfig(DataClassORJSONMixin):
    """Double-gyre stream function parameters and integration settings."""

    amplitude: float = field(default=0.1, metadata=field_options(alias="C"))
    eta: float = field(default=0.1)
    omega: float = field(default=math.pi / 5)
    x0: float = field(default=0.5)
    y0: float = field(default=0.625)
    horizon: float = field(default=10000.0, metadata=field_options(alias="T"))
    n: int = field(default=20000)
    h: float = field(default=RK4_STEP)

    class Config(BaseConfig):
        """mashumaro options."""

        serialize_by_alias = True
        allow_deserialization_not_by_alias = True

    def __post_init__(self) -> None:
        """Validate step and sample count."""
        if self.h <= 0.0:
            msg = f"Integrator step must be positive, got {self.h}"
            raise ParameterError(msg)
        if self.n < 2:  # noqa: PLR2004
            msg = f"Need at least 2 samples, got {self.n}"
            raise ParameterError(msg)
        if self.horizon <= 0.0:
            msg = f"Horizon must be positive, got {self.horizon}"
            raise ParameterError(msg)


@dataclass
class Verdict(DataClassORJSONMixin):
    """Outcome of one numerical check."""

    name: str
    inputs: dict[str, Any] = field(default_factory=dict)
    lhs: float | None = field(default=None)
    rhs: float | None = field(default=None)
    margin: float | None = field(default=None)
    passed: bool = field(default=False)
    skipped: bool = field(default=False)
    note: str = field(default="")

    @property
    def failed(self) -> bool:
        """Whether this verdict counts as a failure."""
        return not self.skipped and not self.passed

    @property
    def status(self) -> str:
        """PASS, FAIL or SKIP."""
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


@dataclass
class RunMetadata(DataClassORJSONMixin):
    """Sidecar record describing how an output file was produced."""

    command: str
    version: str
    parameters: dict[str, Any] = field(default_factory=dict)
    seed: int | None = field(default=None)
    h: float | None = field(default=None)
    c: float | None = field(default=None)
    notes: list[str] = field(default_factory=list)
