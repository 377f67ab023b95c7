"""The reduced one-mode probe state and its estimation figures of merit.

The probe is the particle mode left after tracing out the antiparticle
partner: a two-outcome diagonal state with weights 1/(1+X) and X/(1+X),
where X is the excitation weight from the Bogoliubov layer.  Because the
eigenvectors do not move with the expansion parameter, the eigenprojector
measurement is optimal and the classical Fisher information of (p0, p1)
equals the quantum Fisher information.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bogoliubov import ANALYTIC, excitation_weight
from .cosmology import ModelParams
from .qfi import OutcomeDistribution, classical_fisher

DEFAULT_TRIALS = 10**11  # repetition count used for the published bound curves

_IDENTITY_RTOL = 1e-10


@dataclass(frozen=True)
class ProbeState:
    """Two-outcome diagonal probe state with its excitation weight."""

    p0: float
    p1: float
    X: float
    dX: float


@dataclass(frozen=True)
class EstimationResult:
    """Fisher information and Cramer-Rao bound for a parameter point.

    bound is the lower bound on the squared error after `trials` repetitions,
    1/(trials * qfi); it is +inf when the state carries no information.
    """

    qfi: float
    classical_fisher: float
    bound: float
    trials: float
    derivative_method: str


def probe(
    p: ModelParams,
    deriv_method: str = ANALYTIC,
    fd_step: float | None = None,
) -> ProbeState:
    """Reduced particle-mode state at the given channel parameters."""
    cf = excitation_weight(p, deriv_method, fd_step)
    p0 = 1.0 / (1.0 + cf.X)
    return ProbeState(p0=p0, p1=cf.X * p0, X=cf.X, dX=cf.dX_deps)


def state_entropy(state: ProbeState) -> float:
    """Von Neumann entropy of the probe state in nats (0 log 0 = 0)."""
    s = 0.0
    for w in (state.p0, state.p1):
        if w > 0.0:
            s -= w * math.log(w)
    return s


def entanglement_entropy(p: ModelParams) -> float:
    """Entropy of the reduced particle mode, i.e. the particle-antiparticle
    entanglement generated by the expansion.  Zero for m_tilde = 0."""
    return state_entropy(probe(p))


def qfi_eps(
    p: ModelParams,
    trials: float = DEFAULT_TRIALS,
    deriv_method: str = ANALYTIC,
    fd_step: float | None = None,
) -> EstimationResult:
    """Quantum Fisher information for the expansion parameter.

    Evaluates the two-outcome closed form literally,

        (1+X) (d p0)^2 + ((1+X)/X) (d p1)^2,

    and cross-checks it against the simplified (dX)^2 / (X (1+X)^2) before
    returning; disagreement beyond rounding indicates a broken derivative and
    raises.  X = 0 returns zero information by convention (the derivative
    vanishes at least as fast as sqrt(X) there).
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    st = probe(p, deriv_method, fd_step)
    X, dX = st.X, st.dX
    if X == 0.0:
        qfi = 0.0
        cfi = classical_fisher(OutcomeDistribution((st.p0, st.p1), (0.0, 0.0)))
    else:
        denom = (1.0 + X) * (1.0 + X)
        dp0 = -dX / denom
        dp1 = dX / denom
        qfi = (1.0 + X) * dp0 * dp0 + (1.0 + X) / X * dp1 * dp1
        simplified = dX * dX / (X * denom)
        if abs(qfi - simplified) > _IDENTITY_RTOL * max(abs(qfi), abs(simplified)):
            raise ArithmeticError(
                f"QFI forms disagree: literal={qfi!r} simplified={simplified!r}"
            )
        cfi = classical_fisher(OutcomeDistribution((st.p0, st.p1), (dp0, dp1)))
    bnd = 1.0 / (trials * qfi) if qfi > 0.0 else math.inf
    return EstimationResult(
        qfi=qfi,
        classical_fisher=cfi,
        bound=bnd,
        trials=trials,
        derivative_method=deriv_method,
    )


def bound(
    p: ModelParams,
    trials: float,
    deriv_method: str = ANALYTIC,
    fd_step: float | None = None,
) -> EstimationResult:
    """Cramer-Rao bound on the squared error after `trials` repetitions."""
    return qfi_eps(p, trials=trials, deriv_method=deriv_method, fd_step=fd_step)
