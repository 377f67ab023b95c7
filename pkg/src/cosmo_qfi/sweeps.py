"""Sweep and optimization engine for the bound and QFI curves.

Sweeps evaluate the estimation figures of merit over a one-dimensional grid
in any of the three channel parameters; rows carry the entropy column so the
entanglement comparison falls out of the same pass.  Optimization locates the
coordinate minimizing the error bound with a dense pre-scan followed by
bounded scalar refinement inside the best grid cell, so the result can never
be worse than the scan and unimodality is not assumed.

Grid points are independent; evaluation honors the COSMO_QFI_THREADS
environment variable (0 or unset means automatic).  Row order and values do
not depend on the thread count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from scipy.optimize import minimize_scalar

from .bogoliubov import ANALYTIC
from .cosmology import ModelParams
from .errors import CosmoQfiError
from .probe import DEFAULT_TRIALS, EstimationResult, qfi_eps, state_entropy, probe

SWEEP_VARIABLES = ("m_tilde", "k_tilde", "eps")

_PRESCAN_POINTS = 1000
_REFINE_XATOL = 1e-6


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep description.

    `fixed` supplies the two parameters that are not swept (its value for the
    swept coordinate is ignored).  lo = 0 is admitted only when sweeping
    m_tilde, where zero mass is a valid degenerate input.
    """

    variable: str
    lo: float
    hi: float
    points: int
    fixed: ModelParams
    trials: float = DEFAULT_TRIALS
    spacing: str = "linear"

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"variable must be one of {SWEEP_VARIABLES}")
        lo_min_ok = self.lo > 0.0 or (self.lo == 0.0 and self.variable == "m_tilde")
        if not lo_min_ok:
            raise ValueError(f"lo must be > 0 (>= 0 for m_tilde), got {self.lo}")
        if not self.hi > self.lo:
            raise ValueError(f"hi must exceed lo, got [{self.lo}, {self.hi}]")
        if self.points < 2:
            raise ValueError(f"points must be >= 2, got {self.points}")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and self.lo <= 0.0:
            raise ValueError("log spacing requires lo > 0")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


@dataclass(frozen=True)
class SweepRow:
    """One grid point: swept value, QFI, error bound, entropy, excitation."""

    value: float
    qfi: float
    bound: float
    entropy: float
    p1: float


def _grid(lo: float, hi: float, points: int, spacing: str) -> list[float]:
    if spacing == "log":
        llo, lhi = math.log(lo), math.log(hi)
        vals = [math.exp(llo + i * (lhi - llo) / (points - 1)) for i in range(points)]
    else:
        vals = [lo + i * (hi - lo) / (points - 1) for i in range(points)]
    vals[0], vals[-1] = lo, hi  # endpoints exact
    return vals


def _params_at(fixed: ModelParams, variable: str, value: float) -> ModelParams:
    return replace(fixed, **{variable: value})


def _thread_count() -> int:
    raw = os.environ.get("COSMO_QFI_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = min(8, os.cpu_count() or 1)
    return n


def _eval_row(p: ModelParams, trials: float, deriv_method: str) -> tuple:
    est = qfi_eps(p, trials=trials, deriv_method=deriv_method)
    st = probe(p, deriv_method=deriv_method)
    return est.qfi, est.bound, state_entropy(st), st.p1


def sweep(spec: SweepSpec, deriv_method: str = ANALYTIC) -> list[SweepRow]:
    """Evaluate the estimation curve over the grid, in ascending order.

    Degenerate points do not abort the sweep: a zero-information point (for
    example m_tilde = 0) gets qfi 0 and an infinite bound, and a point whose
    evaluation fails outright gets NaN figures with an infinite bound.
    """
    values = _grid(spec.lo, spec.hi, spec.points, spec.spacing)

    def one(value: float) -> SweepRow:
        try:
            q, b, s, p1 = _eval_row(
                _params_at(spec.fixed, spec.variable, value), spec.trials, deriv_method
            )
        except CosmoQfiError:
            return SweepRow(value, math.nan, math.inf, math.nan, math.nan)
        return SweepRow(value, q, b, s, p1)

    workers = _thread_count()
    if workers > 1 and spec.points >= 32:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, values))
    return [one(v) for v in values]


@dataclass(frozen=True)
class OptimumResult:
    """Located optimum of the error bound over one coordinate."""

    variable: str
    coordinate: float
    estimation: EstimationResult
    boundary_warning: bool


def optimize(
    variable: str,
    lo: float,
    hi: float,
    fixed: ModelParams,
    trials: float = DEFAULT_TRIALS,
    deriv_method: str = ANALYTIC,
) -> OptimumResult:
    """Coordinate in [lo, hi] minimizing the error bound.

    A dense pre-scan guards against local traps; bounded scalar minimization
    (golden section with parabolic steps) then refines inside the bracket of
    the best scan point to 1e-6 absolute in the coordinate.  The refined
    point is discarded if it fails to beat the scan.  boundary_warning is set
    when the optimum lies within one scan cell of either end.
    """
    if variable not in SWEEP_VARIABLES:
        raise ValueError(f"variable must be one of {SWEEP_VARIABLES}")
    if not (lo > 0.0 and hi > lo):
        raise ValueError(f"need 0 < lo < hi, got [{lo}, {hi}]")

    def objective(value: float) -> float:
        try:
            est = qfi_eps(_params_at(fixed, variable, value), trials=trials,
                          deriv_method=deriv_method)
        except CosmoQfiError:
            return math.inf
        return est.bound

    grid = _grid(lo, hi, _PRESCAN_POINTS, "linear")
    scan = [objective(v) for v in grid]
    i_best = min(range(len(grid)), key=lambda i: scan[i])
    if math.isinf(scan[i_best]):
        raise CosmoQfiError("bound is infinite over the whole scan range")

    bracket = (grid[max(i_best - 1, 0)], grid[min(i_best + 1, len(grid) - 1)])
    res = minimize_scalar(
        objective, bounds=bracket, method="bounded", options={"xatol": _REFINE_XATOL}
    )
    best_x, best_f = grid[i_best], scan[i_best]
    if res.fun <= best_f:
        best_x, best_f = float(res.x), float(res.fun)

    cell = (hi - lo) / (_PRESCAN_POINTS - 1)
    warn = (best_x - lo) <= cell or (hi - best_x) <= cell
    est = qfi_eps(_params_at(fixed, variable, best_x), trials=trials,
                  deriv_method=deriv_method)
    return OptimumResult(variable=variable, coordinate=best_x,
                         estimation=est, boundary_warning=warn)
