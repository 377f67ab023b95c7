"""Fisher-information machinery for discrete outcome families.

Covers the three pieces the probe state needs: classical Fisher information
of an outcome distribution, the spectral form of the quantum Fisher
information for families that need not be full rank, and the diagonal
symmetric logarithmic derivative.  Zero-eigenvalue terms follow the usual
spectral summation convention (they are dropped, and 0/0 outcomes contribute
nothing).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import SingularOutcomeError

_PROB_SUM_TOL = 1e-12
_DPROB_SUM_TOL = 1e-10


@dataclass(frozen=True)
class OutcomeDistribution:
    """Outcome probabilities and their parameter derivatives."""

    probs: tuple[float, ...]
    dprobs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probs", tuple(float(x) for x in self.probs))
        object.__setattr__(self, "dprobs", tuple(float(x) for x in self.dprobs))
        if len(self.probs) != len(self.dprobs):
            raise ValueError("probs and dprobs must have equal length")
        if not self.probs:
            raise ValueError("empty distribution")
        for x in self.probs:
            if not (0.0 <= x <= 1.0) or not math.isfinite(x):
                raise ValueError(f"probability {x} outside [0, 1]")
        if abs(math.fsum(self.probs) - 1.0) > _PROB_SUM_TOL:
            raise ValueError("probabilities do not sum to 1")
        if abs(math.fsum(self.dprobs)) > _DPROB_SUM_TOL:
            raise ValueError("probability derivatives do not sum to 0")


@dataclass(frozen=True)
class SpectralFamily:
    """Eigenvalues, their derivatives, and eigenvector overlap strengths.

    overlap_terms[m][n] holds |<psi_m | d psi_n>|^2 and must be symmetric
    with nonnegative entries.
    """

    eigenvalues: tuple[float, ...]
    deigenvalues: tuple[float, ...]
    overlap_terms: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", tuple(float(x) for x in self.eigenvalues))
        object.__setattr__(self, "deigenvalues", tuple(float(x) for x in self.deigenvalues))
        object.__setattr__(
            self, "overlap_terms", tuple(tuple(float(x) for x in row) for row in self.overlap_terms)
        )
        n = len(self.eigenvalues)
        if len(self.deigenvalues) != n or len(self.overlap_terms) != n:
            raise ValueError("inconsistent family dimensions")
        for lam in self.eigenvalues:
            if lam < 0.0 or not math.isfinite(lam):
                raise ValueError(f"eigenvalue {lam} negative or non-finite")
        if abs(math.fsum(self.eigenvalues) - 1.0) > _PROB_SUM_TOL:
            raise ValueError("eigenvalues do not sum to 1")
        for i, row in enumerate(self.overlap_terms):
            if len(row) != n:
                raise ValueError("overlap_terms must be square")
            for j, w in enumerate(row):
                if w < 0.0:
                    raise ValueError("overlap_terms must be nonnegative")
                if w != self.overlap_terms[j][i]:
                    raise ValueError("overlap_terms must be symmetric")


def classical_fisher(d: OutcomeDistribution) -> float:
    """Sum of dp^2/p over outcomes with p > 0.

    Outcomes with p = 0 and dp = 0 contribute nothing; p = 0 with dp != 0 is
    a singular outcome and raises.
    """
    total = 0.0
    for prob, dprob in zip(d.probs, d.dprobs):
        if prob > 0.0:
            total += dprob * dprob / prob
        elif dprob != 0.0:
            raise SingularOutcomeError(
                f"outcome with zero probability has derivative {dprob}"
            )
    return total


def qfi_spectral(f: SpectralFamily) -> float:
    """Quantum Fisher information from the spectral decomposition.

    First term sums (d lambda)^2/lambda over nonzero eigenvalues; second term
    sums 2 (lambda_m - lambda_n)^2/(lambda_m + lambda_n) * overlap over all
    ordered pairs m != n with lambda_m + lambda_n != 0.
    """
    total = 0.0
    for lam, dlam in zip(f.eigenvalues, f.deigenvalues):
        if lam != 0.0:
            total += dlam * dlam / lam
    n = len(f.eigenvalues)
    for m in range(n):
        for k in range(n):
            if m == k:
                continue
            denom = f.eigenvalues[m] + f.eigenvalues[k]
            if denom == 0.0:
                continue
            diff = f.eigenvalues[m] - f.eigenvalues[k]
            total += 2.0 * diff * diff / denom * f.overlap_terms[m][k]
    return total


def sld_diagonal(probs: Sequence[float], dprobs: Sequence[float]) -> list[float]:
    """Diagonal symmetric logarithmic derivative entries dp_i / p_i.

    Valid on the support only: any zero probability raises, since the
    defining relation d(rho) = (rho L + L rho)/2 cannot be solved there.
    """
    if len(probs) != len(dprobs):
        raise ValueError("probs and dprobs must have equal length")
    out = []
    for prob, dprob in zip(probs, dprobs):
        if prob <= 0.0:
            raise SingularOutcomeError("sld_diagonal requires probs > 0 entrywise")
        out.append(dprob / prob)
    return out
