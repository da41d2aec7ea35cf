"""First-order degree of coherence between the two well ground states."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import InputError, OutOfRange
from .numerics import coth_stable
from .potential import WellGeometry, analyze, asymmetric_well, overlap
from .spectral_thermo import Convention, temperature_ratio
from .timescales import (
    PRINTED_QUASI_STATIC_COEFFICIENT,
    ChannelScenario,
    Constant,
    dwell_time,
    quasi_static_ratio,
    ratio_dec_dwell,
    ratio_first_principles,
)


def g1_first_principles(
    nu: float, xi1: float, gamma: float, tau_M: float, delay: float | None = None
) -> float:
    """exp(-gamma tau) times the ground-state overlap at displacement xi1.

    The correlation delay tau defaults to the dwell time.
    """
    if not (nu > 0 and gamma > 0 and tau_M > 0):
        raise InputError("nu, gamma and tau_M must be positive")
    if delay is None:
        delay = dwell_time(gamma, tau_M)
    elif delay < 0:
        raise InputError("delay must be non-negative")
    return math.exp(-gamma * delay) * overlap(nu, xi1)


def g1_printed(Q: float, theta: float) -> float:
    """exp(-Q) exp(-coth(theta/2))."""
    if not (Q > 0 and theta > 0):
        raise InputError("Q and theta must be positive")
    return math.exp(-Q) * math.exp(-coth_stable(0.5 * theta))


def g1_quasi_static(Q: float) -> float:
    if not Q > 0:
        raise InputError("Q must be positive")
    return math.exp(-Q)


def ratio_from_coherence(g: float) -> float:
    """4.5 / ln(1/g); 0 for a fully decohered state, inf for a fully coherent one."""
    if not 0.0 <= g <= 1.0:
        raise OutOfRange(f"degree of coherence must lie in [0, 1], got {g!r}")
    if g == 0.0:
        return 0.0
    if g == 1.0:
        return math.inf
    return PRINTED_QUASI_STATIC_COEFFICIENT / -math.log(g)


@dataclass(frozen=True)
class CoherenceReport:
    Q: float
    theta: float
    g1_printed: float
    g1_quasi_static: float
    g1_first_principles: float
    tau_ratio_printed: float
    tau_ratio_quasi_static: float
    tau_ratio_from_g: float
    tau_ratio_first_principles: float
    temperature_ratio: float
    sustainable: bool

    def as_dict(self) -> dict:
        return asdict(self)


REPORT_FIELDS = tuple(CoherenceReport.__dataclass_fields__)


def build_report(
    scenario: ChannelScenario,
    geometry: WellGeometry | None = None,
    *,
    convention: Convention = "printed",
    constant: Constant = "paper_4_5",
) -> CoherenceReport:
    """Evaluate every coherence and timescale output for one scenario.

    Without an explicit ``geometry`` the A=14, B=45 well matching the
    scenario's (m, epsilon0, w) supplies nu and the well displacement.
    """
    if geometry is None:
        geometry = analyze(asymmetric_well(scenario.m, scenario.epsilon0, scenario.w))
    Q, theta = scenario.Q, scenario.theta
    g_qs = g1_quasi_static(Q)
    tau_ratio = ratio_dec_dwell(Q, theta)
    return CoherenceReport(
        Q=Q,
        theta=theta,
        g1_printed=g1_printed(Q, theta),
        g1_quasi_static=g_qs,
        g1_first_principles=g1_first_principles(
            geometry.nu, geometry.xi_separation, scenario.gamma, scenario.tau_M
        ),
        tau_ratio_printed=tau_ratio,
        tau_ratio_quasi_static=quasi_static_ratio(Q, constant),
        tau_ratio_from_g=ratio_from_coherence(g_qs),
        tau_ratio_first_principles=ratio_first_principles(scenario),
        temperature_ratio=temperature_ratio(theta, convention),
        sustainable=tau_ratio > 1.0,
    )
