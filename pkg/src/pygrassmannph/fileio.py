"""Stage files: points, frame fields, GPDM distance matrices and metadata sidecars."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
import orjson

from .const import FLOAT_FORMAT, FRAMES_MAGIC, GPDM_MAGIC, GPDM_VERSION, METADATA_SUFFIX
from .errors import InputFileError, MatrixError, ParseError
from .generators.loaders import load_points
from .models.frame import FrameField, Provenance
from .models.matrix import DistanceMatrix, MetricTag
from .models.records import RunMetadata

if TYPE_CHECKING:
    from .generators.flows import Trajectory
    from .models.cloud import PointCloud
    from .models.records import InconsistencyReport

_LOGGER = logging.getLogger(__name__)

GPDM_HEADER = np.dtype(
    [("magic", "S4"), ("version", "<u4"), ("n", "<u4"), ("metric_tag", "u1"), ("c", "<f8")],
)
SERIES_HEADER = "t,x,y"


def _fmt(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def _write_text(path: str | Path, text: str, what: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as err:
        msg = f"Cannot write {what} {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err


def _read_text(path: str | Path, what: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        msg = f"Cannot read {what} {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err


def write_points(path: str | Path, cloud: PointCloud) -> None:
    """CSV, one point per line, 17 significant digits."""
    lines = (",".join(_fmt(x) for x in point) for point in cloud.points)
    _write_text(path, "\n".join(lines) + "\n", "point file")


def read_points(path: str | Path, intrinsic_dim: int) -> PointCloud:
    """Read a CSV point file."""
    return load_points(path, "csv", intrinsic_dim)


def write_frames(path: str | Path, field: FrameField) -> None:
    """Header `GPFRAMES n D d oriented provenance`, then n blocks of D rows of d values."""
    n, D, d = field.frames.shape
    lines = [f"{FRAMES_MAGIC} {n} {D} {d} {int(field.oriented)} {field.provenance}"]
    for frame in field.frames:
        lines.extend(" ".join(_fmt(x) for x in row) for row in frame)
    _write_text(path, "\n".join(lines) + "\n", "frame file")


def read_frames(path: str | Path) -> FrameField:
    """Read a frame file written by write_frames.

    Raises
    ------
        ParseError: bad header, wrong row width or missing rows

    """
    lines = _read_text(path, "frame file").splitlines()
    header = lines[0].split() if lines else []
    if len(header) != 6 or header[0] != FRAMES_MAGIC:  # noqa: PLR2004
        msg = f"Expected a '{FRAMES_MAGIC} n D d oriented provenance' header"
        raise ParseError(msg, path=str(path), line=1)
    try:
        n, D, d, oriented = (int(x) for x in header[1:5])
        provenance = Provenance(header[5])
    except ValueError as err:
        msg = f"Malformed frame header {lines[0]!r}"
        raise ParseError(msg, path=str(path), line=1) from err
    body = lines[1:]
    if len(body) < n * D:
        msg = f"Expected {n * D} rows, found {len(body)}"
        raise ParseError(msg, path=str(path), line=len(lines))
    values = np.empty((n * D, d))
    for number, line in enumerate(body[: n * D], start=2):
        fields = line.split()
        if len(fields) != d:
            msg = f"Expected {d} values, got {len(fields)}"
            raise ParseError(msg, path=str(path), line=number)
        try:
            values[number - 2] = [float(x) for x in fields]
        except ValueError as err:
            msg = f"Non-numeric frame row {line!r}"
            raise ParseError(msg, path=str(path), line=number) from err
    return FrameField(values.reshape(n, D, d), oriented=bool(oriented), provenance=provenance)


def write_gpdm(path: str | Path, matrix: DistanceMatrix) -> None:
    """Little-endian binary: header, then the strict lower triangle row by row."""
    header = np.array(
        [(GPDM_MAGIC, GPDM_VERSION, matrix.n, matrix.metric_tag.code, matrix.c)],
        dtype=GPDM_HEADER,
    )
    rows, cols = np.tril_indices(matrix.n, k=-1)
    payload = header.tobytes() + matrix.entries[rows, cols].astype("<f8").tobytes()
    try:
        Path(path).write_bytes(payload)
    except OSError as err:
        msg = f"Cannot write distance matrix {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err


def read_gpdm(path: str | Path) -> DistanceMatrix:
    """Read a GPDM file.

    Raises
    ------
        ParseError: wrong magic, version or size
        MatrixError: the stored values do not form a distance matrix

    """
    try:
        payload = Path(path).read_bytes()
    except OSError as err:
        msg = f"Cannot read distance matrix {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err
    if len(payload) < GPDM_HEADER.itemsize:
        msg = "File is shorter than the GPDM header"
        raise ParseError(msg, path=str(path))
    header = np.frombuffer(payload, dtype=GPDM_HEADER, count=1)[0]
    if bytes(header["magic"]) != GPDM_MAGIC or int(header["version"]) != GPDM_VERSION:
        msg = f"Not a version {GPDM_VERSION} GPDM file"
        raise ParseError(msg, path=str(path))
    n = int(header["n"])
    expected = GPDM_HEADER.itemsize + 8 * (n * (n - 1) // 2)
    if len(payload) != expected:
        msg = f"Expected {expected} bytes for n={n}, got {len(payload)}"
        raise ParseError(msg, path=str(path))
    try:
        tag = MetricTag.from_code(int(header["metric_tag"]))
    except ValueError as err:
        raise ParseError(str(err), path=str(path)) from err
    lower = np.frombuffer(payload, dtype="<f8", offset=GPDM_HEADER.itemsize)
    entries = np.zeros((n, n))
    rows, cols = np.tril_indices(n, k=-1)
    entries[rows, cols] = lower
    entries[cols, rows] = lower
    try:
        return DistanceMatrix(entries, metric_tag=tag, c=float(header["c"]))
    except MatrixError as err:
        msg = f"{path}: {err}"
        raise MatrixError(msg) from err


def write_matrix_csv(path: str | Path, matrix: DistanceMatrix) -> None:
    """Full square matrix as CSV, 17 significant digits."""
    lines = (",".join(_fmt(x) for x in row) for row in matrix.entries)
    _write_text(path, "\n".join(lines) + "\n", "matrix CSV")


def write_report(path: str | Path, report: InconsistencyReport) -> None:
    """Edge report as text, see InconsistencyReport.to_text."""
    _write_text(path, report.to_text(), "edge report")


def write_series(path: str | Path, trajectory: Trajectory) -> None:
    """CSV with header t,x,y."""
    lines = [SERIES_HEADER]
    lines += [f"{_fmt(t)},{_fmt(x)},{_fmt(y)}" for t, x, y in zip(trajectory.times, trajectory.x, trajectory.y, strict=True)]
    _write_text(path, "\n".join(lines) + "\n", "series file")


def read_series(path: str | Path) -> tuple[list[str], np.ndarray]:
    """Read a headed CSV time series.

    Returns
    -------
        (column names, (rows, columns) array)

    """
    lines = [line for line in _read_text(path, "series file").splitlines() if line.strip()]
    if not lines:
        msg = "Series file is empty"
        raise ParseError(msg, path=str(path), line=1)
    names = [name.strip() for name in lines[0].split(",")]
    rows = []
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != len(names):
            msg = f"Expected {len(names)} fields, got {len(fields)}"
            raise ParseError(msg, path=str(path), line=number)
        try:
            rows.append([float(x) for x in fields])
        except ValueError as err:
            msg = f"Non-numeric row {line!r}"
            raise ParseError(msg, path=str(path), line=number) from err
    return names, np.array(rows, dtype=np.float64).reshape(-1, len(names))


def metadata_path(output: str | Path) -> Path:
    """Sidecar path `<output>.meta.jsonl`."""
    output = Path(output)
    return output.with_name(output.name + METADATA_SUFFIX)


def write_metadata(output: str | Path, metadata: RunMetadata) -> Path:
    """Write the sidecar as one JSON line with sorted keys."""
    path = metadata_path(output)
    line = orjson.dumps(metadata.to_dict(), option=orjson.OPT_SORT_KEYS | orjson.OPT_SERIALIZE_NUMPY)
    try:
        path.write_bytes(line + b"\n")
    except OSError as err:
        msg = f"Cannot write metadata {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err
    return path


def read_metadata(output: str | Path) -> RunMetadata:
    """Read the sidecar of an output file."""
    path = metadata_path(output)
    try:
        return RunMetadata.from_json(path.read_bytes().strip())
    except OSError as err:
        msg = f"Cannot read metadata {path}: {err}"
        raise InputFileError(msg, path=str(path)) from err
