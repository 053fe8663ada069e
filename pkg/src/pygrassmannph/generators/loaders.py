"""Readers for external point clouds: CSV, whitespace-separated and OFF vertices."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal

import numpy as np

from ..errors import InputFileError, ParseError
from ..models.cloud import PointCloud

_LOGGER = logging.getLogger(__name__)

PointFormat = Literal["csv", "whitespace", "off"]


def _data_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based numbers."""
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            lines.append((number, stripped))
    return lines


def _parse_row(fields: list[str], number: int, path: str) -> list[float]:
    try:
        return [float(field) for field in fields]
    except ValueError as err:
        msg = f"Non-numeric value in {fields!r}"
        raise ParseError(msg, path=path, line=number) from err


def _parse_table(lines: list[tuple[int, str]], separator: str | None, path: str) -> np.ndarray:
    rows = []
    width = None
    for number, line in lines:
        fields = [field.strip() for field in line.split(separator)]
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            msg = f"Expected {width} coordinates, got {len(fields)}"
            raise ParseError(msg, path=path, line=number)
        rows.append(_parse_row(fields, number, path))
    return np.array(rows, dtype=np.float64)


def _parse_off(lines: list[tuple[int, str]], path: str) -> np.ndarray:
    number, header = lines[0]
    if not header.startswith("OFF"):
        msg = f"Expected an OFF header, got {header!r}"
        raise ParseError(msg, path=path, line=number)
    rest = header[3:].split()
    body = lines[1:]
    if not rest:
        if not body:
            msg = "Missing vertex/face counts"
            raise ParseError(msg, path=path, line=number)
        number, counts_line = body[0]
        rest = counts_line.split()
        body = body[1:]
    try:
        n_vertices = int(rest[0])
    except (ValueError, IndexError) as err:
        msg = f"Malformed counts line {' '.join(rest)!r}"
        raise ParseError(msg, path=path, line=number) from err
    if len(body) < n_vertices:
        last = body[-1][0] if body else number
        msg = f"Expected {n_vertices} vertices, found {len(body)} lines"
        raise ParseError(msg, path=path, line=last)
    rows = []
    for number, line in body[:n_vertices]:
        fields = line.split()
        if len(fields) < 3:  # noqa: PLR2004
            msg = f"Vertex needs 3 coordinates, got {len(fields)}"
            raise ParseError(msg, path=path, line=number)
        rows.append(_parse_row(fields[:3], number, path))
    return np.array(rows, dtype=np.float64).reshape(-1, 3)


def infer_format(path: str | Path) -> PointFormat:
    """Guess the point format from the file suffix."""
    suffix = Path(path).suffix.lower()
    if suffix == ".off":
        return "off"
    if suffix == ".csv":
        return "csv"
    return "whitespace"


def load_points(path: str | Path, fmt: PointFormat | None = None, intrinsic_dim: int = 1) -> PointCloud:
    """Read a point cloud, one point per line.

    Args:
    ----
        path: file to read
        fmt: "csv", "whitespace" or "off" (vertex block of an OFF mesh);
            inferred from the suffix when None
        intrinsic_dim: declared manifold dimension

    Returns:
    -------
        PointCloud

    Raises:
    ------
        ParseError: malformed or empty file, with the offending line

    """
    fmt = fmt or infer_format(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        msg = f"Cannot read point file {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err
    lines = _data_lines(text)
    if not lines:
        msg = "File contains no points"
        raise ParseError(msg, path=str(path), line=1)
    if fmt == "csv":
        points = _parse_table(lines, ",", str(path))
    elif fmt == "whitespace":
        points = _parse_table(lines, None, str(path))
    elif fmt == "off":
        points = _parse_off(lines, str(path))
    else:
        msg = f"Unknown point format {fmt!r}"
        raise ParseError(msg, path=str(path))
    if points.shape[0] == 0:
        msg = "File contains no points"
        raise ParseError(msg, path=str(path), line=1)
    _LOGGER.debug("Loaded %d points in ℝ^%d from %s", points.shape[0], points.shape[1], path)
    return PointCloud(points, intrinsic_dim=intrinsic_dim)
