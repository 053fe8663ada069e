"""CSV and SVG output of persistence diagrams."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import matplotlib as mpl
import numpy as np
from matplotlib.figure import Figure

from ..const import (
    DIAGRAM_CSV_HEADER,
    DIAGRAM_MARKERS,
    FLOAT_FORMAT,
    INFINITE_BAR_MARKER,
    INFINITE_BAR_SCALE,
    SVG_HASH_SALT,
)
from ..errors import InputFileError, ParseError
from ..models.diagram import PersistenceDiagram

if TYPE_CHECKING:
    from collections.abc import Sequence

_LOGGER = logging.getLogger(__name__)


def format_value(value: float) -> str:
    """17 significant digits, or inf."""
    return "inf" if np.isinf(value) else format(float(value), FLOAT_FORMAT)


def diagrams_to_csv(diagrams: Sequence[PersistenceDiagram]) -> str:
    """Render diagrams as CSV text with columns degree,birth,death."""
    lines = [DIAGRAM_CSV_HEADER]
    for diagram in sorted(diagrams, key=lambda dg: dg.degree):
        lines.extend(f"{diagram.degree},{format_value(b)},{format_value(d)}" for b, d in diagram.bars)
    return "\n".join(lines) + "\n"


def parse_diagrams_csv(text: str, *, path: str | None = None, maxdim: int | None = None) -> list[PersistenceDiagram]:
    """Parse CSV text written by diagrams_to_csv."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != DIAGRAM_CSV_HEADER:
        msg = f"Expected header {DIAGRAM_CSV_HEADER!r}"
        raise ParseError(msg, path=path, line=1)
    bars: dict[int, list[tuple[float, float]]] = {}
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 3:  # noqa: PLR2004
            msg = f"Expected 3 fields, got {len(fields)}"
            raise ParseError(msg, path=path, line=number)
        try:
            degree, birth, death = int(fields[0]), float(fields[1]), float(fields[2])
        except ValueError as err:
            msg = f"Malformed diagram row {line!r}"
            raise ParseError(msg, path=path, line=number) from err
        bars.setdefault(degree, []).append((birth, death))
    top = max([*bars.keys(), -1 if maxdim is None else maxdim])
    return [PersistenceDiagram(degree=degree, bars=bars.get(degree, [])) for degree in range(top + 1)]


def write_diagrams_csv(diagrams: Sequence[PersistenceDiagram], path: str | Path) -> None:
    """Write diagrams as CSV."""
    try:
        Path(path).write_text(diagrams_to_csv(diagrams), encoding="utf-8")
    except OSError as err:
        msg = f"Cannot write diagram file {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err


def read_diagrams_csv(path: str | Path, *, maxdim: int | None = None) -> list[PersistenceDiagram]:
    """Read a diagram CSV file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        msg = f"Cannot read diagram file {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err
    return parse_diagrams_csv(text, path=str(path), maxdim=maxdim)


def write_diagrams_svg(
    diagrams: Sequence[PersistenceDiagram],
    path: str | Path,
    *,
    metric_tag: str,
    c: float,
) -> None:
    """Scatter plot of all degrees with the diagonal; reruns are byte-identical.

    Infinite bars are drawn at 1.05 times the largest finite value.
    """
    finite_values = [dg.finite.ravel() for dg in diagrams if dg.finite.size]
    top = float(np.max(np.concatenate(finite_values))) if finite_values else 1.0
    top = top if top > 0.0 else 1.0
    infinity = INFINITE_BAR_SCALE * top

    with mpl.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "path"}):
        figure = Figure(figsize=(5, 5))
        axes = figure.add_subplot()
        axes.plot([0.0, infinity], [0.0, infinity], color="0.6", linewidth=0.8)
        for diagram in diagrams:
            marker = DIAGRAM_MARKERS[diagram.degree % len(DIAGRAM_MARKERS)]
            color = f"C{diagram.degree}"
            finite = diagram.finite
            if finite.size:
                axes.scatter(finite[:, 0], finite[:, 1], marker=marker, color=color, s=14, label=f"H{diagram.degree}")
            infinite = diagram.infinite
            if infinite.size:
                axes.scatter(
                    infinite[:, 0],
                    np.full(infinite.shape[0], infinity),
                    marker=INFINITE_BAR_MARKER,
                    color=color,
                    s=24,
                    label=f"H{diagram.degree} (inf)",
                )
        axes.axhline(infinity, color="0.8", linewidth=0.6, linestyle="--")
        axes.set_xlim(-0.02 * infinity, 1.02 * infinity)
        axes.set_ylim(-0.02 * infinity, 1.02 * infinity)
        axes.set_aspect("equal")
        axes.set_xlabel("birth")
        axes.set_ylabel("death")
        axes.set_title(f"{metric_tag}, c = {c:.6g}")
        if any(len(dg) for dg in diagrams):
            axes.legend(loc="lower right", fontsize="small")
        try:
            figure.savefig(path, format="svg", metadata={"Date": None})
        except OSError as err:
            msg = f"Cannot write diagram plot {path}: {err}"
            raise InputFileError(msg, path=str(path)) from err
    _LOGGER.debug("Wrote diagram plot to %s", path)
