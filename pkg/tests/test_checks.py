import math

import numpy as np
import pytest

from pygrassmannph.checks import (
    StabilityRow,
    check_curvature_closed_form,
    check_curvature_monotonicity,
    check_curvature_ratio_zero,
    check_log_ii_bound,
    check_normalized_bottleneck,
    check_stability,
    check_torus_ratios,
    check_volume_bound,
    curvature_ratio,
    homotopy_radius_bound,
    run_checks,
    stability_experiment,
    summary_table,
    torus_quantities,
    torus_vol_c,
)
from pygrassmannph.checks import torus as torus_checks
from pygrassmannph.checks.theory import refine_quadrature
from pygrassmannph.errors import ParameterError
from pygrassmannph.generators import Torus
from pygrassmannph.models import Verdict
from pygrassmannph.pipeline.metric import dc_distance

TUBE = np.array([0.0, 1.0])


@pytest.fixture
def jet():  # noqa: ANN201
    return Torus(1.0, 0.25).jet(0.0, 0.0)


@pytest.mark.parametrize("c", [0.01, 0.1, 1.0])
def test_curvature_ratio_tube_circle(jet, c: float) -> None:  # noqa: ANN001
    assert curvature_ratio(jet, TUBE, c) == pytest.approx(4.0 / (1.0 + 16.0 * c), rel=1e-6)


def test_curvature_ratio_at_zero(jet) -> None:  # noqa: ANN001
    assert curvature_ratio(jet, TUBE, 0.0) == jet.normal_curvature(TUBE)
    assert check_curvature_ratio_zero(jet, TUBE).passed
    with pytest.raises(ParameterError):
        curvature_ratio(jet, TUBE, -1.0)


def test_curvature_monotonicity(jet) -> None:  # noqa: ANN001
    verdict = check_curvature_monotonicity(jet, TUBE, [0.5, 0.01, 0.1])
    assert verdict.passed
    assert not verdict.skipped
    assert check_curvature_closed_form(1.0, 0.25, [0.01, 0.1, 1.0]).passed


def test_refine_quadrature_on_trigonometric_integrand() -> None:
    value, _ = refine_quadrature(lambda u, v: 1.0 + np.cos(u) ** 2 * np.sin(v) ** 2, 16)
    assert value == pytest.approx(4.0 * math.pi**2 + math.pi**2, rel=1e-12)


def test_volume_bound_at_zero() -> None:
    verdict = check_volume_bound(Torus(1.0, 0.25), 0.0)
    assert verdict.passed
    assert verdict.lhs == pytest.approx(4.0 * math.pi**2 * 0.25, rel=1e-8)
    assert verdict.rhs == pytest.approx(4.0 * math.pi**2 * 0.25, rel=1e-8)


def test_volume_bound_is_continuous_in_c() -> None:
    torus = Torus(1.0, 0.25)
    assert check_volume_bound(torus, 1e-9).lhs == pytest.approx(math.pi**2, abs=1e-6)
    verdict = check_volume_bound(torus, 0.5625)
    assert verdict.passed
    assert verdict.lhs == pytest.approx(torus_vol_c(1.0, 0.25, 0.5625), rel=1e-8)


def test_torus_quantities() -> None:
    quantities = torus_quantities(1.0, 0.25, 0.0)
    assert quantities.bottleneck == pytest.approx(0.25)
    assert quantities.vol_c == pytest.approx(quantities.vol, rel=1e-10)
    assert torus_quantities(1.0, 0.1, 0.81).bottleneck == 1.0
    assert torus_quantities(1.0, 0.1, 0.81).sys_bound_valid
    with pytest.raises(ParameterError):
        torus_quantities(1.0, 2.0, 0.1)
    with pytest.raises(ParameterError):
        torus_quantities(1.0, 0.1, -0.1)


def test_thin_torus_ratios() -> None:
    verdicts = {verdict.name: verdict for verdict in check_torus_ratios(1.0, 1e-3)}
    assert verdicts["vol_c_upper_bound"].passed
    assert verdicts["systole_ratio"].rhs == pytest.approx(0.6110, abs=1e-4)
    assert verdicts["bottleneck_ratio"].rhs == pytest.approx(0.01549, abs=1e-5)
    assert verdicts["systole_ratio"].passed
    assert verdicts["bottleneck_ratio"].passed


def test_normalized_bottleneck() -> None:
    r = 0.25
    upper = 12.0 * r * r / math.pi**2
    verdicts = check_normalized_bottleneck(1.0, r, [upper * k / 20 for k in range(1, 21)])
    assert len(verdicts) == 20 + 20 + 19
    assert all(verdict.passed for verdict in verdicts)


def test_normalized_bottleneck_chain_uses_measured_distance(monkeypatch: pytest.MonkeyPatch) -> None:
    r = 0.25
    upper = 12.0 * r * r / math.pi**2
    (chain, *_) = check_normalized_bottleneck(1.0, r, [upper / 2])
    assert chain.name == "normalized_bottleneck_chain"
    assert chain.lhs == pytest.approx(chain.rhs, rel=1e-12)
    monkeypatch.setattr(torus_checks, "dc_distance", lambda *args: 1.01 * dc_distance(*args))
    (chain, *_) = check_normalized_bottleneck(1.0, r, [upper / 2])
    assert chain.failed


def test_normalized_bottleneck_precondition() -> None:
    (verdict,) = check_normalized_bottleneck(1.0, 0.6, [0.1])
    assert verdict.skipped
    assert not verdict.failed
    with pytest.raises(ParameterError):
        check_normalized_bottleneck(1.0, 0.25, [1.0])


@pytest.mark.parametrize("kind", ["u-circle", "v-circle", "geodesic"])
def test_log_ii_bound(kind: str) -> None:
    verdict = check_log_ii_bound(Torus(1.0, 0.25), kind, samples=40)  # type: ignore[arg-type]
    assert verdict.passed, verdict


def test_log_ii_bound_unknown_curve() -> None:
    with pytest.raises(ParameterError):
        check_log_ii_bound(Torus(1.0, 0.25), "helix", samples=4)  # type: ignore[arg-type]


def test_homotopy_radius_bound() -> None:
    bound = homotopy_radius_bound(2.0, 1.0, 10.0)
    assert bound.proof == pytest.approx(math.pi / 4.0)
    assert bound.statement == pytest.approx(math.pi / 4.0)
    assert homotopy_radius_bound(2.0, 1.0, 0.1).proof == 0.1
    different = homotopy_radius_bound(2.0, 4.0, 10.0)
    assert different.proof < different.statement
    assert different.discrepancy > 0.0
    with pytest.raises(ParameterError):
        homotopy_radius_bound(0.0, 1.0, 1.0)


def test_stability_experiment() -> None:
    rows = stability_experiment(1.0, 0.4, (8, 4), (0.0, 0.01, 0.04), c=0.05)
    assert [row.delta for row in rows] == [0.0, 0.01, 0.04]
    assert rows[0].distances == {0: 0.0, 1: 0.0}
    assert rows[1].distances[0] <= rows[2].distances[0] + 1e-6


def test_rigid_translation_keeps_diagrams() -> None:
    rows = stability_experiment(1.0, 0.4, (8, 4), (0.1, 0.5), c=0.05, kind="constant")
    for row in rows:
        assert max(row.distances.values()) == pytest.approx(0.0, abs=1e-12)


def test_check_stability() -> None:
    good = [StabilityRow(0.0, {0: 0.0}), StabilityRow(0.01, {0: 0.02}), StabilityRow(0.02, {0: 0.05})]
    assert all(verdict.passed for verdict in check_stability(good))
    bad = [StabilityRow(0.01, {0: 0.2}), StabilityRow(0.02, {0: 0.1})]
    assert [verdict.passed for verdict in check_stability(bad)] == [False, False]


def test_run_checks_filter() -> None:
    verdicts = run_checks("homotopy_radius")
    assert [verdict.name for verdict in verdicts] == ["homotopy_radius"]
    assert verdicts[0].passed


def test_summary_table() -> None:
    verdicts = [
        Verdict(name="a", lhs=1.0, rhs=2.0, margin=1.0, passed=True),
        Verdict(name="b", skipped=True),
        Verdict(name="c", lhs=3.0, rhs=2.0, margin=-1.0),
    ]
    table = summary_table(verdicts)
    assert table.splitlines()[0].startswith("STATUS")
    assert "SKIP" in table
    assert table.splitlines()[-1] == "3 checks, 1 failed, 1 skipped"
