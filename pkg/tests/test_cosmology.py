"""Kinematics layer: scale factor, frequencies, parameter validation."""

import math

import numpy as np
import pytest

from cosmo_qfi import DegenerateParameterError, ModelParams, frequencies, scale_factor
from cosmo_qfi.cosmology import domega_out_deps


def test_scale_factor_values():
    assert scale_factor(0.0, 1.0, 1.0) == 2.0
    assert scale_factor(-1e6, 1.0, 1.0) == 1.0
    assert scale_factor(1e6, 1.0, 1.0) == 3.0


def test_scale_factor_rejects_bad_params():
    with pytest.raises(ValueError):
        scale_factor(0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        scale_factor(0.0, -1.0, 1.0)


def test_frequencies_unit_point():
    f = frequencies(ModelParams(1.0, 1.0, 1.0))
    assert math.isclose(f.omega_in, math.sqrt(2.0), rel_tol=1e-15)
    assert math.isclose(f.omega_out, math.sqrt(10.0), rel_tol=1e-15)
    assert math.isclose(f.omega_plus, 0.5 * (math.sqrt(10.0) + math.sqrt(2.0)), rel_tol=1e-15)
    assert math.isclose(f.omega_minus, 0.5 * (math.sqrt(10.0) - math.sqrt(2.0)), rel_tol=1e-15)
    assert f.mu_out == 3.0
    # chi = (sqrt(10) - 3)/1, evaluated in its stable form
    assert math.isclose(f.chi_abs, math.sqrt(10.0) - 3.0, rel_tol=1e-13)
    assert math.isclose(f.zeta_pp, f.omega_plus + 1.0, rel_tol=1e-15)
    assert math.isclose(f.zeta_mm, f.omega_minus - 1.0, rel_tol=1e-12)


def test_frequencies_massless_collapse():
    f = frequencies(ModelParams(3.0, 0.0, 2.0))
    assert f.omega_in == f.omega_out == 2.0
    assert f.omega_minus == 0.0
    assert f.chi_abs == 0.0
    assert f.mu_out == 0.0
    assert f.zeta_mm == f.zeta_mp == 0.0


def test_frequencies_no_expansion_limit():
    f = frequencies(ModelParams(1e-12, 1.0, 1.0))
    assert math.isclose(f.omega_out, f.omega_in, rel_tol=1e-11)
    assert f.omega_minus < 1e-11


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(-1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        ModelParams(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        ModelParams(1.0, -0.5, 1.0)
    with pytest.raises(ValueError):
        ModelParams(1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        ModelParams(math.nan, 1.0, 1.0)


def test_frequencies_overflow_is_degenerate():
    with pytest.raises(DegenerateParameterError):
        frequencies(ModelParams(1e300, 1e10, 1.0))


_GRID = np.geomspace(0.01, 100.0, 10)


def test_grid_invariants():
    # omega_out monotone in eps; chi in (0,1) for m > 0; zeta_pm >= m;
    # zeta_pp and zeta_mp positive.
    for m in _GRID:
        for k in _GRID:
            prev = None
            for eps in _GRID:
                f = frequencies(ModelParams(float(eps), float(m), float(k)))
                assert f.omega_out >= f.omega_in > 0.0
                assert 0.0 < f.chi_abs < 1.0
                assert f.zeta_pp > 0.0 and f.zeta_mp > 0.0
                assert f.zeta_pm >= m * (1.0 - 1e-15)
                if prev is not None:
                    assert f.omega_out > prev
                prev = f.omega_out


def test_zeta_mm_never_positive():
    # omega_minus < m*eps strictly for k > 0, so zeta_mm stays negative and
    # only reaches zero in the k -> 0 limit.
    for m in _GRID:
        for k in _GRID:
            for eps in _GRID:
                f = frequencies(ModelParams(float(eps), float(m), float(k)))
                assert f.zeta_mm < 0.0


def test_domega_out_deps_matches_difference_quotient():
    p = ModelParams(1.3, 0.7, 2.1)
    h = 1e-6
    fd = (
        frequencies(ModelParams(p.eps + h, p.m_tilde, p.k_tilde)).omega_out
        - frequencies(ModelParams(p.eps - h, p.m_tilde, p.k_tilde)).omega_out
    ) / (2.0 * h)
    assert math.isclose(domega_out_deps(p), fd, rel_tol=1e-9)
