import math
from pathlib import Path

import numpy as np
import pytest

from pygrassmannph.errors import InputFileError, ParseError
from pygrassmannph.models import PersistenceDiagram
from pygrassmannph.persistence import (
    diagrams_to_csv,
    parse_diagrams_csv,
    read_diagrams_csv,
    write_diagrams_csv,
    write_diagrams_svg,
)


def _diagrams() -> list[PersistenceDiagram]:
    return [
        PersistenceDiagram(degree=0, bars=[(0.0, 0.1), (0.0, 1.0 / 3.0), (0.0, math.inf)]),
        PersistenceDiagram(degree=1, bars=[(math.sqrt(2.0), 2.0)]),
    ]


def test_empty_diagram_is_header_only() -> None:
    assert diagrams_to_csv([PersistenceDiagram(degree=0, bars=np.empty((0, 2)))]) == "degree,birth,death\n"


def test_infinite_bar() -> None:
    text = diagrams_to_csv([PersistenceDiagram(degree=0, bars=[(0.0, math.inf)])])
    assert text.splitlines()[1] == "0,0,inf"


def test_csv_round_trip(tmp_path: Path) -> None:
    path = tmp_path / "bars.csv"
    write_diagrams_csv(_diagrams(), path)
    restored = read_diagrams_csv(path)
    assert [dg.degree for dg in restored] == [0, 1]
    for before, after in zip(_diagrams(), restored, strict=True):
        assert before.same_bars(after)
    assert diagrams_to_csv(restored) == path.read_text(encoding="utf-8")


def test_maxdim_pads_empty_degrees() -> None:
    restored = parse_diagrams_csv("degree,birth,death\n0,0,inf\n", maxdim=2)
    assert [len(dg) for dg in restored] == [1, 0, 0]


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("", 1),
        ("birth,death\n", 1),
        ("degree,birth,death\n0,0,1\n0,0\n", 3),
        ("degree,birth,death\n0,zero,1\n", 2),
    ],
)
def test_parse_errors(text: str, line: int) -> None:
    with pytest.raises(ParseError) as err:
        parse_diagrams_csv(text, path="bars.csv")
    assert err.value.line == line


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(InputFileError):
        read_diagrams_csv(tmp_path / "absent.csv")


def test_svg_is_reproducible(tmp_path: Path) -> None:
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    write_diagrams_svg(_diagrams(), first, metric_tag="grassmann_dc", c=0.5)
    write_diagrams_svg(_diagrams(), second, metric_tag="grassmann_dc", c=0.5)
    assert first.read_bytes() == second.read_bytes()
    assert b"<svg" in first.read_bytes()
