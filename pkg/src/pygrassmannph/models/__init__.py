"""Init file for the models."""

from pygrassmannph.models.cloud import NeighborGraph, PointCloud
from pygrassmannph.models.diagram import PersistenceDiagram
from pygrassmannph.models.frame import Frame, FrameField, PrincipalAngles, Provenance
from pygrassmannph.models.matrix import DistanceMatrix, MetricTag, ScaleMode, ScaleParams
from pygrassmannph.models.records import (
    EdgeDeterminant,
    InconsistencyReport,
    RunMetadata,
    TrajectoryConfig,
    Verdict,
)

__all__ = [
    "DistanceMatrix",
    "EdgeDeterminant",
    "Frame",
    "FrameField",
    "InconsistencyReport",
    "MetricTag",
    "NeighborGraph",
    "PersistenceDiagram",
    "PointCloud",
    "PrincipalAngles",
    "Provenance",
    "RunMetadata",
    "ScaleMode",
    "ScaleParams",
    "TrajectoryConfig",
    "Verdict",
]
