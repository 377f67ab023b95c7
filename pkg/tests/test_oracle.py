"""Mode-equation oracle: agreement with closed forms, integrator quality."""

import pytest

from cosmo_qfi import (
    IntegrationConfig,
    ModelParams,
    WindowTooSmallError,
    coefficients,
    integrate_mode,
    mixing_sq_sinh,
    ratio_sq,
    wronskian_drift,
)


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


@pytest.mark.parametrize(
    "point",
    [(1.0, 1.0, 1.0), (0.01, 2.0, 0.5), (5.0, 0.3, 1.0), (2.0, 0.1, 3.0)],
)
def test_ratio_matches_closed_form(point):
    p = ModelParams(*point)
    match = integrate_mode(p)
    assert _rel(match.ratio_sq, mixing_sq_sinh(p)) < 1e-4
    assert match.fit_residual < 1e-8
    assert abs(match.A_num) > abs(match.B_num)


def test_plus_branch_matches_its_gamma_ratio():
    p = ModelParams(1.0, 1.0, 1.0)
    match = integrate_mode(p, IntegrationConfig(branch="plus"))
    assert _rel(match.ratio_sq, ratio_sq(coefficients(p, "plus"))) < 1e-4


def test_near_conformal_ratio_vanishes():
    match = integrate_mode(ModelParams(1.0, 1e-6, 1.0))
    assert match.ratio_sq < 1e-10


def test_ratio_invariant_under_start_shift():
    p = ModelParams(1.0, 1.0, 1.0)
    cfg = IntegrationConfig()
    base = integrate_mode(p, cfg).ratio_sq
    for delta in (0.25, 0.6, 1.0):
        shifted = integrate_mode(p, cfg, eta0=-cfg.eta_span - delta).ratio_sq
        assert abs(shifted - base) / base < 1e-8


def test_wronskian_drift_within_budget():
    for point in [(1.0, 1.0, 1.0), (0.5, 5.0, 2.0), (2.0, 0.1, 3.0)]:
        assert wronskian_drift(ModelParams(*point)) < 1e-8


def test_wronskian_drift_window_independent():
    p = ModelParams(1.0, 1.0, 1.0)
    d15 = wronskian_drift(p, IntegrationConfig(eta_span=15.0))
    d30 = wronskian_drift(p, IntegrationConfig(eta_span=30.0))
    assert d30 < 10.0 * max(d15, 1e-12)


def test_wronskian_drift_plane_wave_regime():
    # eps ~ 0 makes the equation constant-coefficient; conservation is then
    # limited only by the requested tolerance (drift scales linearly with
    # rel_tol, ~1e-11 at the package default)
    tight = IntegrationConfig(rel_tol=1e-14, abs_tol=1e-16)
    assert wronskian_drift(ModelParams(1e-12, 1.0, 1.0), tight) < 1e-12


def test_wronskian_drift_at_loose_tolerance():
    # the documented budget: rel_tol 1e-10 keeps drift below 1e-8
    cfg = IntegrationConfig(rel_tol=1e-10, abs_tol=1e-12)
    for point in [(1.0, 1.0, 1.0), (0.5, 5.0, 2.0)]:
        assert wronskian_drift(ModelParams(*point), cfg) < 1e-8


def test_window_too_small_raises():
    with pytest.raises(WindowTooSmallError):
        integrate_mode(ModelParams(600.0, 0.5, 1.0))


def test_config_validation():
    with pytest.raises(ValueError):
        IntegrationConfig(eta_span=10.0)
    with pytest.raises(ValueError):
        IntegrationConfig(rel_tol=1e-5)
    with pytest.raises(ValueError):
        IntegrationConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        IntegrationConfig(branch="sideways")


def test_requires_massive_field():
    with pytest.raises(ValueError):
        integrate_mode(ModelParams(1.0, 0.0, 1.0))
    with pytest.raises(ValueError):
        wronskian_drift(ModelParams(1.0, 0.0, 1.0))


def test_eta0_must_precede_window():
    with pytest.raises(ValueError):
        integrate_mode(ModelParams(1.0, 1.0, 1.0), eta0=-10.0)
