"""Command line interface: generate samples, estimate frames, build matrices, compute diagrams."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any

import colorlog
import numpy as np

from .__version__ import __version__
from .checks import run_checks, summary_table
from .const import EXIT_INCONSISTENT, EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, MAX_HOMOLOGY_DIM, RK4_STEP
from .errors import (
    DataError,
    DegenerateCloudError,
    DegenerateNeighborhoodError,
    DimensionError,
    GrassmannPHError,
    InconsistentOrientationError,
    InputFileError,
    MatrixError,
    NumericsError,
    ParameterError,
    PreconditionError,
    SizeError,
)
from .fileio import (
    read_frames,
    read_gpdm,
    read_points,
    read_series,
    write_frames,
    write_gpdm,
    write_matrix_csv,
    write_metadata,
    write_points,
    write_report,
    write_series,
)
from .generators import (
    delay_embed,
    delay_steps,
    double_gyre_trajectory,
    ellipse_sample,
    load_points,
    mobius_sample,
    torus_sample,
)
from .models import InconsistencyReport, RunMetadata, ScaleParams, TrajectoryConfig
from .persistence import bottleneck_by_degree, read_diagrams_csv, vr_persistence, write_diagrams_csv, write_diagrams_svg
from .pipeline import (
    choose_scale,
    default_k,
    distance_matrix,
    estimate_frame_field,
    euclidean_matrix,
    knn,
    propagate_orientation,
    subsample,
    symmetrize,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    from .models import DistanceMatrix, FrameField, PointCloud

_LOGGER = logging.getLogger(__name__)

EXIT_CODES: tuple[tuple[type[GrassmannPHError], int], ...] = (
    (InputFileError, EXIT_INPUT),
    (ParameterError, EXIT_INPUT),
    (DimensionError, EXIT_INPUT),
    (PreconditionError, EXIT_INPUT),
    (MatrixError, EXIT_INPUT),
    (NumericsError, EXIT_NUMERIC),
    (DegenerateNeighborhoodError, EXIT_NUMERIC),
    (DegenerateCloudError, EXIT_NUMERIC),
    (DataError, EXIT_NUMERIC),
    (SizeError, EXIT_NUMERIC),
)


def _configure_logging(verbosity: int) -> None:
    handler = colorlog.StreamHandler()
    handler.setFormatter(colorlog.ColoredFormatter("%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"))
    logger = logging.getLogger("pygrassmannph")
    logger.handlers.clear()
    logger.addHandler(handler)
    logger.setLevel(max(logging.DEBUG, logging.WARNING - 10 * verbosity))
    logging.captureWarnings(capture=True)
    logging.getLogger("py.warnings").handlers = [handler]


def _metadata(command: str, args: argparse.Namespace, **extra: Any) -> RunMetadata:
    parameters = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in {"func", "verbose", "command", "generator"} and value is not None
    }
    return RunMetadata(
        command=command,
        version=__version__,
        parameters={key: str(value) if isinstance(value, Path) else value for key, value in parameters.items()},
        seed=getattr(args, "seed", None),
        **extra,
    )


def _estimate_oriented(cloud: PointCloud, k: int | None) -> FrameField | InconsistencyReport:
    graph = knn(cloud, k or default_k(cloud.n, cloud.intrinsic_dim))
    field = estimate_frame_field(cloud, graph)
    return propagate_orientation(field, symmetrize(graph))


def _require_oriented(result: FrameField | InconsistencyReport, out: Path) -> FrameField:
    if isinstance(result, InconsistencyReport):
        write_report(f"{out}.report.txt", result)
        msg = f"Orientation propagation left {len(result.violations)} violating edges, report in {out}.report.txt"
        raise InconsistentOrientationError(msg, violations=len(result.violations))
    _report_indeterminate(out, result)
    return result


def _report_indeterminate(out: Path, field: FrameField) -> None:
    """Write `<out>.indeterminate.txt` when some edges carried no orientation."""
    if not field.indeterminate:
        return
    path = f"{out}.indeterminate.txt"
    write_report(path, InconsistencyReport(indeterminate=list(field.indeterminate)))
    _LOGGER.warning("%d indeterminate edges listed in %s", len(field.indeterminate), path)


def cmd_gen(args: argparse.Namespace) -> int:
    """Write a synthetic sample and its sidecar."""
    frames = None
    notes: list[str] = []
    if args.generator == "torus":
        sample = torus_sample(args.R, args.r, args.n, args.seed, args.mode)
        cloud, frames = sample.cloud, sample.field
    elif args.generator == "ellipse":
        cloud, frames = ellipse_sample(args.a, args.b, args.n)
    elif args.generator == "mobius":
        cloud = mobius_sample(args.R, args.w, args.n, args.seed)
    elif args.generator == "doublegyre":
        cfg = TrajectoryConfig(
            amplitude=args.C, eta=args.eta, omega=args.omega, x0=args.x0, y0=args.y0, horizon=args.T, n=args.n, h=args.h
        )
        write_series(args.out, double_gyre_trajectory(cfg))
        write_metadata(args.out, _metadata("gen doublegyre", args, h=cfg.h))
        return EXIT_OK
    else:
        names, table = read_series(args.input)
        if args.column not in names:
            msg = f"Column {args.column!r} not in {names}"
            raise ParameterError(msg)
        spacing = float(table[1, names.index("t")] - table[0, names.index("t")]) if "t" in names and len(table) > 1 else 1.0
        tau_steps = delay_steps(args.tau, spacing)
        notes.append(f"tau_steps = round({args.tau:g} / {spacing:.17g}) = {tau_steps}")
        cloud = delay_embed(table[:, names.index(args.column)], tau_steps, args.m, intrinsic_dim=args.d)
    write_points(args.out, cloud)
    if frames is not None and args.frames_out is not None:
        write_frames(args.frames_out, frames)
    write_metadata(args.out, _metadata(f"gen {args.generator}", args, notes=notes))
    _LOGGER.info("Wrote %d points to %s", cloud.n, args.out)
    return EXIT_OK


def cmd_frames(args: argparse.Namespace) -> int:
    """Estimate tangent frames by local PCA."""
    cloud = load_points(args.points, intrinsic_dim=args.d)
    k = args.k or default_k(cloud.n, cloud.intrinsic_dim)
    field = estimate_frame_field(cloud, knn(cloud, k))
    write_frames(args.out, field)
    write_metadata(args.out, _metadata("frames", args, notes=[f"k = {k}"]))
    return EXIT_OK


def cmd_orient(args: argparse.Namespace) -> int:
    """Propagate a consistent orientation; exit 4 with a report on failure."""
    cloud = load_points(args.points, intrinsic_dim=args.d)
    field = read_frames(args.frames).with_cloud(cloud)
    k = args.k or default_k(cloud.n, cloud.intrinsic_dim)
    result = propagate_orientation(field, symmetrize(knn(cloud, k)), tau=args.tau)
    if isinstance(result, InconsistencyReport):
        report = args.report or Path(f"{args.out}.report.txt")
        write_report(report, result)
        _LOGGER.error("%d violating edges, report written to %s", len(result.violations), report)
        return EXIT_INCONSISTENT
    write_frames(args.out, result)
    _report_indeterminate(args.out, result)
    notes = [f"k = {k}", f"{len(result.indeterminate)} indeterminate edges"]
    write_metadata(args.out, _metadata("orient", args, notes=notes))
    return EXIT_OK


def _write_matrix(args: argparse.Namespace, matrix: DistanceMatrix, notes: list[str]) -> None:
    write_gpdm(args.out, matrix)
    if args.csv is not None:
        write_matrix_csv(args.csv, matrix)
    write_metadata(args.out, _metadata("distmat", args, c=matrix.c or None, notes=notes))


def cmd_distmat(args: argparse.Namespace) -> int:
    """Build a Euclidean or d_c distance matrix over a subsample."""
    cloud = read_points(args.points, args.d)
    indices = subsample(cloud, args.subsample, args.seed) if args.subsample else np.arange(cloud.n)
    sub = cloud.subset(indices)
    notes = [f"subsample of {indices.size} / {cloud.n} points"]
    if args.metric == "euclidean":
        _write_matrix(args, euclidean_matrix(sub), notes)
        return EXIT_OK

    if args.frames is not None:
        field = read_frames(args.frames).with_cloud(cloud)
        if not field.oriented:
            graph = knn(cloud, args.k or default_k(cloud.n, args.d))
            field = _require_oriented(propagate_orientation(field, symmetrize(graph)), args.out)
        field = field.subset(indices)
    elif args.frames_on == "full":
        field = _require_oriented(_estimate_oriented(cloud, args.k), args.out).subset(indices)
    else:
        field = _require_oriented(_estimate_oriented(sub, args.k), args.out)
    params = choose_scale(sub) if args.c == "auto" else ScaleParams(c=float(args.c))
    notes.append(f"frames estimated on the {args.frames_on} cloud" if args.frames is None else f"frames from {args.frames}")
    _write_matrix(args, distance_matrix(sub, field.with_cloud(sub), params), notes)
    return EXIT_OK


def cmd_ph(args: argparse.Namespace) -> int:
    """Compute diagrams from a GPDM file; writes CSV and SVG."""
    matrix = read_gpdm(args.matrix)
    diagrams = vr_persistence(matrix, args.maxdim, args.threshold, engine=args.engine)
    write_diagrams_csv(diagrams, args.out)
    svg = args.svg or Path(args.out).with_suffix(".svg")
    write_diagrams_svg(diagrams, svg, metric_tag=str(matrix.metric_tag), c=matrix.c)
    write_metadata(args.out, _metadata("ph", args, c=matrix.c or None))
    for diagram in diagrams:
        _LOGGER.info("%s", diagram)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    """Print the bottleneck distance per degree."""
    distances = bottleneck_by_degree(read_diagrams_csv(args.first), read_diagrams_csv(args.second))
    for degree, value in distances.items():
        print(f"H{degree} {value:.17g}")
    return EXIT_OK


def cmd_checks(args: argparse.Namespace) -> int:
    """Run the numerical checks; JSON lines on stdout or --out, table on stderr."""
    verdicts = run_checks(args.filter)
    lines = "".join(verdict.to_json() + "\n" for verdict in verdicts)
    if args.out is not None:
        args.out.write_text(lines, encoding="utf-8")
    else:
        sys.stdout.write(lines)
    sys.stderr.write(summary_table(verdicts))
    return EXIT_NUMERIC if any(verdict.failed for verdict in verdicts) else EXIT_OK


def _add_gen_parsers(subparsers: argparse._SubParsersAction) -> None:
    gen = subparsers.add_parser("gen", help="generate a synthetic sample")
    generators = gen.add_subparsers(dest="generator", required=True)

    torus = generators.add_parser("torus", help="torus ((R + r cos v) cos u, (R + r cos v) sin u, r sin v)")
    torus.add_argument("--R", type=float, default=1.0, help="center-line radius")
    torus.add_argument("--r", type=float, default=0.1, help="tube radius")
    torus.add_argument("--n", type=int, default=2000)
    torus.add_argument("--seed", type=int, default=None)
    torus.add_argument("--mode", choices=("grid", "uniform"), default="uniform")

    ellipse = generators.add_parser("ellipse", help="ellipse (a cos t, b sin t)")
    ellipse.add_argument("--a", type=float, default=1.0)
    ellipse.add_argument("--b", type=float, default=0.1)
    ellipse.add_argument("--n", type=int, default=500)

    mobius = generators.add_parser("mobius", help="Möbius band of half-width w")
    mobius.add_argument("--R", type=float, default=1.0)
    mobius.add_argument("--w", type=float, default=0.3)
    mobius.add_argument("--n", type=int, default=1000)
    mobius.add_argument("--seed", type=int, default=None)

    gyre = generators.add_parser("doublegyre", help="double-gyre trajectory as a t,x,y series")
    gyre.add_argument("--C", type=float, default=0.1)
    gyre.add_argument("--eta", type=float, default=0.1)
    gyre.add_argument("--omega", type=float, default=np.pi / 5)
    gyre.add_argument("--x0", type=float, default=0.5)
    gyre.add_argument("--y0", type=float, default=0.625)
    gyre.add_argument("--T", type=float, default=10000.0)
    gyre.add_argument("--n", type=int, default=20000)
    gyre.add_argument("--h", type=float, default=RK4_STEP, help="RK4 step")

    delay = generators.add_parser("delay", help="sliding-window embedding of a series column")
    delay.add_argument("--input", type=Path, required=True, help="CSV series with a header row")
    delay.add_argument("--column", default="x")
    delay.add_argument("--tau", type=float, default=5.0, help="delay in time units")
    delay.add_argument("--m", type=int, default=4, help="embedding dimension")
    delay.add_argument("--d", type=int, default=2, help="declared intrinsic dimension")

    for parser in (torus, ellipse, mobius, gyre, delay):
        parser.add_argument("--out", type=Path, required=True)
    for parser in (torus, ellipse):
        parser.add_argument("--frames-out", type=Path, default=None, help="also write the analytic frames")
    gen.set_defaults(func=cmd_gen)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all subcommands."""
    parser = argparse.ArgumentParser(prog="pygrassmannph", description=__doc__)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_gen_parsers(subparsers)

    frames = subparsers.add_parser("frames", help="local PCA tangent frames")
    frames.add_argument("--points", type=Path, required=True)
    frames.add_argument("--d", type=int, required=True, help="intrinsic dimension")
    frames.add_argument("--k", type=int, default=None, help="neighbors, default round(n^(2/(d+2)))")
    frames.add_argument("--out", type=Path, required=True)
    frames.set_defaults(func=cmd_frames)

    orient = subparsers.add_parser("orient", help="propagate a consistent orientation")
    orient.add_argument("--points", type=Path, required=True)
    orient.add_argument("--frames", type=Path, required=True)
    orient.add_argument("--d", type=int, required=True)
    orient.add_argument("--k", type=int, default=None)
    orient.add_argument("--tau", type=float, default=None, help="reach estimate, long edges are logged")
    orient.add_argument("--out", type=Path, required=True)
    orient.add_argument("--report", type=Path, default=None, help="inconsistency report, default <out>.report.txt")
    orient.set_defaults(func=cmd_orient)

    distmat = subparsers.add_parser("distmat", help="Euclidean or d_c distance matrix")
    distmat.add_argument("--points", type=Path, required=True)
    distmat.add_argument("--d", type=int, required=True)
    distmat.add_argument("--metric", choices=("euclidean", "dc"), default="dc")
    distmat.add_argument("--c", default="auto", help="'auto' or a positive number")
    distmat.add_argument("--subsample", type=int, default=None)
    distmat.add_argument("--seed", type=int, default=None)
    distmat.add_argument("--frames", type=Path, default=None, help="frame file for the full cloud")
    distmat.add_argument("--frames-on", choices=("full", "subsample"), default="full")
    distmat.add_argument("--k", type=int, default=None)
    distmat.add_argument("--out", type=Path, required=True)
    distmat.add_argument("--csv", type=Path, default=None, help="also write the full matrix as CSV")
    distmat.set_defaults(func=cmd_distmat)

    ph = subparsers.add_parser("ph", help="Vietoris-Rips persistence of a GPDM matrix")
    ph.add_argument("--matrix", type=Path, required=True)
    ph.add_argument("--maxdim", type=int, choices=range(MAX_HOMOLOGY_DIM + 1), default=1)
    ph.add_argument("--threshold", type=float, default=None, help="default: enclosing radius")
    ph.add_argument("--engine", choices=("native", "giotto", "auto"), default="auto")
    ph.add_argument("--out", type=Path, required=True, help="diagram CSV")
    ph.add_argument("--svg", type=Path, default=None, help="default: <out> with .svg suffix")
    ph.set_defaults(func=cmd_ph)

    compare = subparsers.add_parser("compare", help="bottleneck distance per degree")
    compare.add_argument("first", type=Path)
    compare.add_argument("second", type=Path)
    compare.set_defaults(func=cmd_compare)

    checks = subparsers.add_parser("checks", help="numerical checks of the curvature and volume inequalities")
    checks.add_argument("--filter", default=None, help="run checks whose name contains this text")
    checks.add_argument("--out", type=Path, default=None, help="verdict JSON lines, default stdout")
    checks.set_defaults(func=cmd_checks)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface.

    Returns
    -------
        0 on success, 2 for bad input, 3 for numerical failures, 4 for
        inconsistent orientation

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except InconsistentOrientationError as err:
        _LOGGER.error("%s", err)  # noqa: TRY400
        return EXIT_INCONSISTENT
    except GrassmannPHError as err:
        for error_type, code in EXIT_CODES:
            if isinstance(err, error_type):
                _LOGGER.error("%s", err)  # noqa: TRY400
                return code
        raise
