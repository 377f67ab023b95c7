"""Independent verification of the closed-form mixing ratio.

Integrates the mode equation directly across the expansion epoch and reads
the mixing coefficients off the asymptotic plane waves.  The in-mode enters
as exp(-i omega_in eta) for both branches; the branch selects only the sign
of the imaginary first-derivative coupling in the equation.  At the far end
the solution is matched to

    A exp(-i omega_out eta) + B exp(+i omega_out eta),

and |B/A|^2 is compared against the Gamma/sinh closed forms by the
verification suite.  Only the magnitude ratio is meaningful here; overall
phase conventions of the exact mode functions are not reproduced.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _kernel
from .cosmology import ModelParams, frequencies, scale_factor
from .errors import IntegrationError, WindowTooSmallError

_BRANCH_SIGN = {"plus": 1.0, "minus": -1.0}
_ASYMPTOTE_TOL = 1e-10  # max allowed deviation of a(eta) from its limits
_CHECKPOINT_BACKOFF = 1.0  # matching consistency is checked this far before the end


@dataclass(frozen=True)
class IntegrationConfig:
    """Window and tolerance settings for the mode-equation integration.

    eta_span is the half-width of the window in units of the inverse
    expansion rate; tanh saturates double precision around 15, which the
    constructor enforces.  Tolerances are capped at 1e-6; the defaults are
    much tighter so the Wronskian drift stays below the verification budget.
    """

    eta_span: float = 15.0
    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    branch: str = "minus"

    def __post_init__(self) -> None:
        if 1.0 - abs(math.tanh(self.eta_span)) >= 1e-12:
            raise ValueError(
                f"eta_span {self.eta_span} too small: scale factor not saturated"
            )
        for tol in (self.rel_tol, self.abs_tol):
            if not 0.0 < tol <= 1e-6:
                raise ValueError(f"tolerance {tol} outside (0, 1e-6]")
        if self.branch not in _BRANCH_SIGN:
            raise ValueError(f"branch must be 'plus' or 'minus', got {self.branch!r}")


@dataclass(frozen=True)
class MatchResult:
    """Matched mixing coefficients and the quality of the plane-wave fit.

    fit_residual measures how well the matched superposition reproduces the
    integrated solution and its derivative one backoff interval before the
    endpoint, relative to |A|.
    """

    A_num: complex
    B_num: complex
    ratio_sq: float
    fit_residual: float


def _check_window(p: ModelParams, span: float, eta0: float) -> None:
    a_out = scale_factor(span, p.eps, 1.0)
    a_in = scale_factor(eta0, p.eps, 1.0)
    if abs(a_out - (1.0 + 2.0 * p.eps)) > _ASYMPTOTE_TOL or abs(a_in - 1.0) > _ASYMPTOTE_TOL:
        raise WindowTooSmallError(
            f"a(eta) not asymptotic at window ends (span {span}, eps {p.eps})"
        )


def _raise_on_status(status: int, p: ModelParams) -> None:
    if status == _kernel.STATUS_MAX_STEPS:
        raise IntegrationError(f"step budget exhausted at {p}")
    if status == _kernel.STATUS_UNDERFLOW:
        raise IntegrationError(f"step size underflow at {p}")


def _in_mode_state(omega_in: float, eta0: float) -> tuple[float, float, float, float]:
    # psi = exp(-i omega_in eta), dpsi = -i omega_in psi at eta0.
    psi = cmath.exp(-1j * omega_in * eta0)
    dpsi = -1j * omega_in * psi
    return (psi.real, psi.imag, dpsi.real, dpsi.imag)


def integrate_mode(
    p: ModelParams,
    cfg: IntegrationConfig | None = None,
    eta0: float | None = None,
) -> MatchResult:
    """Integrate the mode equation and match the asymptotic plane waves.

    eta0 optionally moves the starting point deeper into the asymptotic past
    (the default is -eta_span); the extracted magnitude ratio must not depend
    on it, which the property suite checks.
    """
    if cfg is None:
        cfg = IntegrationConfig()
    if p.m_tilde <= 0.0:
        raise ValueError("integrate_mode requires m_tilde > 0")
    span = cfg.eta_span
    if eta0 is None:
        eta0 = -span
    elif eta0 > -span:
        raise ValueError("eta0 must lie at or before -eta_span")
    _check_window(p, span, eta0)
    f = frequencies(p)
    sign = _BRANCH_SIGN[cfg.branch]

    y = _in_mode_state(f.omega_in, eta0)
    checkpoint = span - _CHECKPOINT_BACKOFF
    y, _, status = _kernel.impl.integrate_endpoint(
        p.eps, p.m_tilde, p.k_tilde, sign, eta0, checkpoint, y, cfg.rel_tol, cfg.abs_tol
    )
    _raise_on_status(status, p)
    psi_c = complex(y[0], y[1])
    dpsi_c = complex(y[2], y[3])
    y, _, status = _kernel.impl.integrate_endpoint(
        p.eps, p.m_tilde, p.k_tilde, sign, checkpoint, span, y, cfg.rel_tol, cfg.abs_tol
    )
    _raise_on_status(status, p)
    psi = complex(y[0], y[1])
    dpsi = complex(y[2], y[3])

    w = f.omega_out
    a_coef = (w * psi + 1j * dpsi) * cmath.exp(1j * w * span) / (2.0 * w)
    b_coef = (w * psi - 1j * dpsi) * cmath.exp(-1j * w * span) / (2.0 * w)
    if a_coef == 0:
        raise IntegrationError("matched transmission coefficient vanished")

    # Consistency of the match: the superposition must reproduce the solution
    # at the checkpoint, where it was not fitted.
    phase = cmath.exp(-1j * w * checkpoint)
    psi_fit = a_coef * phase + b_coef / phase
    dpsi_fit = -1j * w * a_coef * phase + 1j * w * b_coef / phase
    residual = max(abs(psi_fit - psi_c), abs(dpsi_fit - dpsi_c) / w) / abs(a_coef)

    return MatchResult(
        A_num=a_coef,
        B_num=b_coef,
        ratio_sq=abs(b_coef / a_coef) ** 2,
        fit_residual=residual,
    )


def wronskian_drift(p: ModelParams, cfg: IntegrationConfig | None = None) -> float:
    """Max relative drift of the Wronskian of two independent solutions.

    The Wronskian psi1 dpsi2 - psi2 dpsi1 is exactly conserved by the mode
    equation whatever the coefficient function, so its drift is a pure
    integrator-quality gauge.
    """
    if cfg is None:
        cfg = IntegrationConfig()
    if p.m_tilde <= 0.0:
        raise ValueError("wronskian_drift requires m_tilde > 0")
    span = cfg.eta_span
    _check_window(p, span, -span)
    f = frequencies(p)
    sign = _BRANCH_SIGN[cfg.branch]
    base = _in_mode_state(f.omega_in, -span)
    # Second solution: same value, opposite-frequency derivative.
    other = (base[0], base[1], -base[2], -base[3])
    _, drift, _, status = _kernel.impl.integrate_pair_drift(
        p.eps, p.m_tilde, p.k_tilde, sign, -span, span, base + other,
        cfg.rel_tol, cfg.abs_tol,
    )
    _raise_on_status(status, p)
    return drift
