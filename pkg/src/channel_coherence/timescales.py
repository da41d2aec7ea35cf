"""Decoherence time, weak-value dwell time and their ratio.

Natural units, hbar = k_B = 1. The two dimensionless groups are
Q = w sqrt(m epsilon0 / 2) (coherence exponent) and theta = gamma tau_M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import InputError
from .numerics import coth_stable
from .spectral_thermo import gated_inverse_temperature

Constant = Literal["paper_4_5", "exact_limit"]
CONSTANTS = ("paper_4_5", "exact_limit")

PRINTED_QUASI_STATIC_COEFFICIENT = 4.5
EXACT_QUASI_STATIC_COEFFICIENT = 2.0 / math.tanh(0.5)


def _positive(**kwargs: float) -> None:
    for name, value in kwargs.items():
        if not (value > 0 and not math.isnan(value)):
            raise InputError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class ChannelScenario:
    m: float
    gamma: float
    tau_M: float
    epsilon0: float
    w: float

    def __post_init__(self):
        _positive(m=self.m, gamma=self.gamma, tau_M=self.tau_M, epsilon0=self.epsilon0, w=self.w)

    @property
    def theta(self) -> float:
        return self.gamma * self.tau_M

    @property
    def Q(self) -> float:
        return coherence_exponent(self.m, self.epsilon0, self.w)

    def controls(self) -> "DimensionlessControls":
        return DimensionlessControls(Q=self.Q, theta=self.theta)


@dataclass(frozen=True)
class DimensionlessControls:
    Q: float
    theta: float

    def __post_init__(self):
        _positive(Q=self.Q, theta=self.theta)


def coherence_exponent(m: float, epsilon0: float, w: float) -> float:
    _positive(m=m, epsilon0=epsilon0, w=w)
    return w * math.sqrt(0.5 * m * epsilon0)


def decoherence_time(m: float, gamma: float, kT: float, dx: float) -> float:
    """1 / (2 m gamma kT dx^2)."""
    _positive(m=m, gamma=gamma, kT=kT, dx=dx)
    return 1.0 / (2.0 * m * gamma * kT * dx * dx)


def dwell_time(gamma: float, tau_M: float) -> float:
    """Weak-value dwell time coth(gamma tau_M / 2) / gamma."""
    _positive(gamma=gamma, tau_M=tau_M)
    return coth_stable(0.5 * gamma * tau_M) / gamma


def ratio_dec_dwell(Q: float, theta: float) -> float:
    """Printed decoherence/dwell ratio (2/Q) coth(coth(theta/2)/2)."""
    _positive(Q=Q, theta=theta)
    return (2.0 / Q) * normalized_ratio(theta)


def normalized_ratio(theta: float) -> float:
    """coth(coth(theta/2)/2): the ratio divided by its prefactor 2/Q."""
    _positive(theta=theta)
    return coth_stable(0.5 * coth_stable(0.5 * theta))


def quasi_static_coefficient(constant: Constant = "paper_4_5") -> float:
    if constant == "paper_4_5":
        return PRINTED_QUASI_STATIC_COEFFICIENT
    if constant == "exact_limit":
        return EXACT_QUASI_STATIC_COEFFICIENT
    raise InputError(f"unknown constant convention {constant!r}")


def quasi_static_ratio(Q: float, constant: Constant = "paper_4_5") -> float:
    """theta -> infinity ratio: 4.5/Q as printed, or the exact limit 2 coth(1/2)/Q."""
    _positive(Q=Q)
    return quasi_static_coefficient(constant) / Q


def ratio_first_principles(s: ChannelScenario, dx: float | None = None) -> float:
    """Decoherence time at the gated spectral temperature over the dwell time.

    kT comes from the gated two-level model with level gap epsilon0 and the
    spatial shift defaults to the well separation w.
    """
    kT = 1.0 / gated_inverse_temperature(s.gamma, s.tau_M, s.epsilon0)
    tau_dec = decoherence_time(s.m, s.gamma, kT, s.w if dx is None else dx)
    return tau_dec / dwell_time(s.gamma, s.tau_M)
