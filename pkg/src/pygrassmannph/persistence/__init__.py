"""Vietoris-Rips persistence over Z/2 and diagram utilities."""

from pygrassmannph.persistence.bottleneck import bottleneck_by_degree, bottleneck_distance
from pygrassmannph.persistence.diagram_io import (
    diagrams_to_csv,
    parse_diagrams_csv,
    read_diagrams_csv,
    write_diagrams_csv,
    write_diagrams_svg,
)
from pygrassmannph.persistence.oracle import brute_force_persistence
from pygrassmannph.persistence.rips import enclosing_radius, prominent_bars, vr_persistence

__all__ = [
    "bottleneck_by_degree",
    "bottleneck_distance",
    "brute_force_persistence",
    "diagrams_to_csv",
    "enclosing_radius",
    "parse_diagrams_csv",
    "prominent_bars",
    "read_diagrams_csv",
    "vr_persistence",
    "write_diagrams_csv",
    "write_diagrams_svg",
]
