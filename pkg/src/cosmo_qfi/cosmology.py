"""Expansion kinematics: scale factor and all derived mode frequencies.

Every quantity is stored dimensionless (divided by the expansion rate rho);
rho enters only through `scale_factor`, which the mode-equation oracle
integrates with rho = 1.  The Bogoliubov coefficients depend on the expansion
only through these dimensionless combinations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateParameterError


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless channel parameters.

    eps
        Volume ratio of the expansion (ratio of final to initial conformal
        factor growth); the parameter being estimated.  Strictly positive.
    m_tilde
        Field mass in units of the expansion rate.  Zero is admitted as a
        degenerate input (conformally invariant field, no particle creation).
    k_tilde
        Mode wave number in units of the expansion rate.  Strictly positive.
    """

    eps: float
    m_tilde: float
    k_tilde: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eps) and self.eps > 0.0):
            raise ValueError(f"eps must be finite and > 0, got {self.eps}")
        if not (math.isfinite(self.m_tilde) and self.m_tilde >= 0.0):
            raise ValueError(f"m_tilde must be finite and >= 0, got {self.m_tilde}")
        if not (math.isfinite(self.k_tilde) and self.k_tilde > 0.0):
            raise ValueError(f"k_tilde must be finite and > 0, got {self.k_tilde}")


@dataclass(frozen=True)
class FrequencySet:
    """Asymptotic frequencies and the sinh/Gamma argument combinations.

    zeta_pp, zeta_pm, zeta_mp, zeta_mm are omega_plus + m*eps,
    omega_plus - m*eps, omega_minus + m*eps and omega_minus - m*eps; the first
    three are strictly positive for m_tilde > 0 while zeta_mm may cross zero.
    """

    omega_in: float
    omega_out: float
    omega_plus: float
    omega_minus: float
    zeta_pp: float
    zeta_pm: float
    zeta_mp: float
    zeta_mm: float
    mu_out: float
    chi_abs: float


def scale_factor(eta: float, eps: float, rho: float) -> float:
    """Conformal factor 1 + eps*(1 + tanh(rho*eta)).

    Tends to 1 in the asymptotic past and to 1 + 2*eps in the asymptotic
    future; rho sets how fast the transition happens.
    """
    if not (rho > 0.0 and eps > 0.0):
        raise ValueError("scale_factor requires rho > 0 and eps > 0")
    return 1.0 + eps * (1.0 + math.tanh(rho * eta))


def frequencies(p: ModelParams) -> FrequencySet:
    """All derived frequencies for the given channel parameters.

    chi_abs is the magnitude of the spinor-structure factor
    (omega_out - mu_out)/k_tilde, evaluated in the cancellation-free form
    k_tilde/(omega_out + mu_out).  By convention it is exactly zero for
    m_tilde = 0, where no particles are created and the probe weight
    vanishes identically.
    """
    m, k, eps = p.m_tilde, p.k_tilde, p.eps
    mu_out = m * (1.0 + 2.0 * eps)
    omega_in = math.hypot(k, m)
    omega_out = math.hypot(k, mu_out)
    if not (math.isfinite(omega_out) and math.isfinite(omega_in)):
        raise DegenerateParameterError(
            f"frequencies overflow for eps={eps}, m_tilde={m}, k_tilde={k}"
        )
    omega_plus = 0.5 * (omega_out + omega_in)
    omega_minus = 0.5 * (omega_out - omega_in)
    me = m * eps
    chi_abs = 0.0 if m == 0.0 else k / (omega_out + mu_out)
    return FrequencySet(
        omega_in=omega_in,
        omega_out=omega_out,
        omega_plus=omega_plus,
        omega_minus=omega_minus,
        zeta_pp=omega_plus + me,
        zeta_pm=omega_plus - me,
        zeta_mp=omega_minus + me,
        zeta_mm=omega_minus - me,
        mu_out=mu_out,
        chi_abs=chi_abs,
    )


def domega_out_deps(p: ModelParams) -> float:
    """d(omega_out)/d(eps) at fixed m_tilde, k_tilde: 2 m^2 (1+2 eps)/omega_out."""
    f = frequencies(p)
    return 2.0 * p.m_tilde * p.m_tilde * (1.0 + 2.0 * p.eps) / f.omega_out
