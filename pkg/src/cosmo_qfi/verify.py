"""Cross-route verification suites.

Each check compares two independent computations of the same quantity:

* Gamma route versus sinh closed form for the mixing ratio;
* literal two-outcome QFI versus its simplified algebraic form;
* classical Fisher information of the eigenprojector measurement versus the
  spectral QFI of the probe family;
* exact chain-rule derivative of the excitation weight versus Richardson
  finite differences;
* closed-form mixing ratio versus direct integration of the mode equation,
  with the Wronskian drift as the integrator-quality gauge.

The CLI `verify` command prints one row per check and fails if any check
exceeds its tolerance.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bogoliubov import (
    coefficients,
    dX_deps_analytic,
    dX_deps_fd,
    mixing_sq_sinh,
    ratio_sq,
)
from .cosmology import ModelParams
from .oracle import IntegrationConfig, integrate_mode, wronskian_drift
from .probe import probe, qfi_eps
from .qfi import OutcomeDistribution, SpectralFamily, classical_fisher, qfi_spectral
from .sweeps import _thread_count

GRID_RANGE = (0.1, 5.0)

IDENTITY_TOL = 1e-10
DERIVATIVE_TOL = 1e-6
ODE_TOL = 1e-4
DRIFT_TOL = 1e-8

# Curated oracle points spanning eps in [0.01, 5], m_tilde and k_tilde in
# [0.1, 5]; extra points beyond these are drawn from a fixed-seed generator.
ORACLE_POINTS = (
    (1.0, 1.0, 1.0),
    (0.01, 2.0, 0.5),
    (5.0, 0.3, 1.0),
    (0.5, 5.0, 2.0),
    (2.0, 0.1, 3.0),
    (1.5, 0.8, 5.0),
    (0.7, 1.2, 0.1),
    (3.0, 0.5, 0.7),
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    worst: float
    tolerance: float
    points: int

    @property
    def passed(self) -> bool:
        return self.worst <= self.tolerance


def _rel_diff(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


def _axis(points: int) -> list[float]:
    lo, hi = GRID_RANGE
    return [lo + i * (hi - lo) / (points - 1) for i in range(points)]


def _grid_params(points: int) -> list[ModelParams]:
    axis = _axis(points)
    return [
        ModelParams(eps=e, m_tilde=m, k_tilde=k)
        for e in axis for m in axis for k in axis
    ]


def check_gamma_vs_sinh(grid_points: int = 10, tol: float = IDENTITY_TOL) -> CheckResult:
    """Mixing ratio from log-Gamma coefficients against the sinh closed form."""
    worst = 0.0
    params = _grid_params(grid_points)
    for p in params:
        worst = max(worst, _rel_diff(ratio_sq(coefficients(p, "minus")), mixing_sq_sinh(p)))
    return CheckResult("gamma-vs-sinh identity", worst, tol, len(params))


def check_qfi_identity(grid_points: int = 10, tol: float = IDENTITY_TOL) -> CheckResult:
    """Literal two-outcome QFI against (dX)^2 / (X (1+X)^2)."""
    worst = 0.0
    params = _grid_params(grid_points)
    for p in params:
        est = qfi_eps(p)
        st = probe(p)
        simplified = st.dX * st.dX / (st.X * (1.0 + st.X) ** 2)
        worst = max(worst, _rel_diff(est.qfi, simplified))
    return CheckResult("qfi literal-vs-simplified", worst, tol, len(params))


def check_measurement_optimality(
    grid_points: int = 10, tol: float = IDENTITY_TOL
) -> CheckResult:
    """Eigenprojector classical Fisher information against the spectral QFI."""
    worst = 0.0
    params = _grid_params(grid_points)
    for p in params:
        st = probe(p)
        denom = (1.0 + st.X) ** 2
        dp0 = -st.dX / denom
        cfi = classical_fisher(OutcomeDistribution((st.p0, st.p1), (dp0, -dp0)))
        fam = SpectralFamily(
            eigenvalues=(st.p0, st.p1),
            deigenvalues=(dp0, -dp0),
            overlap_terms=((0.0, 0.0), (0.0, 0.0)),
        )
        worst = max(worst, _rel_diff(cfi, qfi_spectral(fam)))
    return CheckResult("measurement optimality", worst, tol, len(params))


def check_derivative(grid_points: int = 10, tol: float = DERIVATIVE_TOL) -> CheckResult:
    """Analytic excitation-weight derivative against Richardson differences."""
    worst = 0.0
    params = _grid_params(grid_points)
    for p in params:
        worst = max(worst, _rel_diff(dX_deps_analytic(p), dX_deps_fd(p)))
    return CheckResult("analytic-vs-fd derivative", worst, tol, len(params))


def oracle_points(count: int = 5) -> list[ModelParams]:
    """Deterministic parameter points for the mode-equation oracle."""
    if count < 1:
        raise ValueError("need at least one oracle point")
    pts = [ModelParams(*t) for t in ORACLE_POINTS[:count]]
    if count > len(ORACLE_POINTS):
        rng = random.Random(20240831)
        for _ in range(count - len(ORACLE_POINTS)):
            pts.append(
                ModelParams(
                    eps=rng.uniform(0.01, 5.0),
                    m_tilde=rng.uniform(0.1, 5.0),
                    k_tilde=rng.uniform(0.1, 5.0),
                )
            )
    return pts


def _map_ordered(fn, items):
    # Integrations over disjoint parameter points are independent, and the
    # compiled kernel releases the GIL, so they run concurrently; gathering
    # in submission order keeps results independent of scheduling.
    workers = _thread_count()
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def check_ode_oracle(count: int = 5, tol: float = ODE_TOL) -> CheckResult:
    """Closed-form mixing ratio against direct mode-equation integration."""
    cfg = IntegrationConfig()

    def one(p: ModelParams) -> float:
        return _rel_diff(integrate_mode(p, cfg).ratio_sq, mixing_sq_sinh(p))

    worst = max(_map_ordered(one, oracle_points(count)))
    return CheckResult("mode-equation oracle", worst, tol, count)


def check_wronskian(count: int = 5, tol: float = DRIFT_TOL) -> CheckResult:
    """Wronskian conservation along the oracle integrations."""
    cfg = IntegrationConfig()
    worst = max(_map_ordered(lambda p: wronskian_drift(p, cfg), oracle_points(count)))
    return CheckResult("wronskian drift", worst, tol, count)


def run_all(
    grid_points: int = 10,
    ode_points: int = 5,
    identity_tol: float = IDENTITY_TOL,
) -> list[CheckResult]:
    """Every check with the given grid resolution and identity tolerance."""
    return [
        check_gamma_vs_sinh(grid_points, identity_tol),
        check_qfi_identity(grid_points, identity_tol),
        check_measurement_optimality(grid_points, identity_tol),
        check_derivative(grid_points),
        check_ode_oracle(ode_points),
        check_wronskian(ode_points),
    ]
