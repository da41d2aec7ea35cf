"""Spectral temperature of a discrete spectrum and its two-level reductions.

All inverse temperatures are returned as 1/(k_B T) in natural units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import DegenerateDenominator, InputError
from .numerics import coth_stable

Convention = Literal["printed", "derived"]
CONVENTIONS = ("printed", "derived")


@dataclass(frozen=True)
class SpectrumOccupation:
    """Levels E_i with degeneracies phi_i and occupation probabilities P_i."""

    energies: tuple[float, ...]
    degeneracies: tuple[float, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self):
        E, phi, P = self.energies, self.degeneracies, self.probabilities
        if not (len(E) == len(phi) == len(P)):
            raise InputError("energies, degeneracies and probabilities differ in length")
        if len(E) < 2:
            raise InputError("at least two levels are required")
        if any(e2 <= e1 for e1, e2 in zip(E, E[1:])):
            raise InputError("energies must be strictly increasing")
        if any(not d >= 1 for d in phi):
            raise InputError("degeneracies must be >= 1")
        # zero-probability levels are rejected, not floored
        if any(not p > 0 for p in P):
            raise InputError("every probability must be positive")
        if abs(math.fsum(P) - 1.0) > 1e-9:
            raise InputError(f"probabilities sum to {math.fsum(P)!r}, not 1")

    @classmethod
    def from_levels(cls, levels: Sequence[tuple[float, float, float]]) -> "SpectrumOccupation":
        E, phi, P = zip(*levels)
        return cls(tuple(map(float, E)), tuple(map(float, phi)), tuple(map(float, P)))

    @classmethod
    def boltzmann(cls, energies: Sequence[float], degeneracies: Sequence[float], beta: float) -> "SpectrumOccupation":
        """Equilibrium occupations P_i proportional to phi_i exp(-beta E_i)."""
        E = np.asarray(energies, dtype=float)
        logw = np.log(np.asarray(degeneracies, dtype=float)) - beta * E
        logw -= logw.max()
        w = np.exp(logw)
        return cls(tuple(E.tolist()), tuple(map(float, degeneracies)), tuple((w / w.sum()).tolist()))

    @property
    def levels(self) -> list[tuple[float, float, float]]:
        return list(zip(self.energies, self.degeneracies, self.probabilities))


@dataclass(frozen=True)
class TwoStateOccupation:
    """Ground states of the lower (P0, E0) and higher (P1, E1) well.

    P0 + P1 is deliberately not required to be 1.
    """

    P0: float
    P1: float
    E0: float
    E1: float

    def __post_init__(self):
        if not (0 < self.P0 <= 1 and 0 < self.P1 <= 1):
            raise InputError("P0 and P1 must lie in (0, 1]")
        if not self.E1 > self.E0:
            raise InputError("E1 must exceed E0")


def inverse_spectral_temperature(s: SpectrumOccupation) -> float:
    E, phi, P = s.energies, s.degeneracies, s.probabilities
    norm = 1.0 - 0.5 * (P[0] + P[-1])
    if norm == 0.0:
        raise DegenerateDenominator("(P_0 + P_N)/2 equals 1")
    terms = [
        0.5 * (P[i] + P[i - 1])
        * (math.log(P[i] / P[i - 1]) - math.log(phi[i] / phi[i - 1]))
        / (E[i] - E[i - 1])
        for i in range(1, len(E))
    ]
    return -math.fsum(terms) / norm


def inverse_spectral_temperature_two_state(t: TwoStateOccupation) -> float:
    mean = 0.5 * (t.P0 + t.P1)
    if mean == 1.0:
        raise DegenerateDenominator("(P0 + P1)/2 equals 1")
    return -mean / (1.0 - mean) * math.log(t.P0 / t.P1) / (t.E0 - t.E1)


def gated_occupation(gamma: float, tau_M: float, delta_E: float) -> TwoStateOccupation:
    """Lower well undecayed (P0 = 1); higher well decays over one dwell time.

    P1 = exp(-gamma tau_D) = exp(-coth(gamma tau_M / 2)).
    """
    _check_gate(gamma, tau_M)
    if not delta_E > 0:
        raise InputError("delta_E must be positive")
    return TwoStateOccupation(P0=1.0, P1=math.exp(-coth_stable(0.5 * gamma * tau_M)), E0=0.0, E1=delta_E)


def gated_inverse_temperature(gamma: float, tau_M: float, delta_E: float) -> float:
    """c coth(c/2) / delta_E with c = coth(gamma tau_M / 2)."""
    _check_gate(gamma, tau_M)
    if not delta_E > 0:
        raise InputError("delta_E must be positive")
    c = coth_stable(0.5 * gamma * tau_M)
    return c * coth_stable(0.5 * c) / delta_E


def temperature_ratio(theta: float, convention: Convention = "printed") -> float:
    """T_spec / T_k as a function of theta = gamma tau_M.

    ``printed`` is 2 tanh(theta/2) tanh(coth(theta/2)/2); ``derived`` follows
    from the gated model with E1 - E0 = k_B T_k / 2 and is 4 times smaller.
    """
    if not theta > 0:
        raise InputError("theta must be positive")
    if convention not in CONVENTIONS:
        raise InputError(f"unknown convention {convention!r}")
    half = 0.5 * theta
    factor = math.tanh(half) * math.tanh(0.5 * coth_stable(half))
    return (2.0 if convention == "printed" else 0.5) * factor


def _check_gate(gamma: float, tau_M: float) -> None:
    if not (gamma > 0 and tau_M > 0):
        raise InputError("gamma and tau_M must be positive")
