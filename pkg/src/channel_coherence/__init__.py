"""Coherence of a particle tunneling through an asymmetric double well.

Closed-form dwell time, decoherence time, spectral temperature and degree
of coherence, with numerical cross-checks and an audit of the constant
factors separating printed formulas from their derivation chains.
"""

from .audit import AuditReport, run_audit
from .coherence import (
    CoherenceReport,
    build_report,
    g1_first_principles,
    g1_printed,
    g1_quasi_static,
    ratio_from_coherence,
)
from .errors import (
    CoherenceError,
    DegenerateCubic,
    DegenerateDenominator,
    DomainError,
    InputError,
    NonConvergence,
    NotBistable,
    OutOfRange,
    PoleAtZero,
)
from .numerics import Cubic, QuadratureResult, coth_stable, cubic_real_roots, integrate_line
from .potential import (
    DoubleWell,
    WellGeometry,
    analyze,
    asymmetric_well,
    evaluate,
    ground_state,
    omega_from_epsilon0,
    overlap,
)
from .spectral_thermo import (
    SpectrumOccupation,
    TwoStateOccupation,
    gated_inverse_temperature,
    inverse_spectral_temperature,
    inverse_spectral_temperature_two_state,
    temperature_ratio,
)
from .timescales import (
    ChannelScenario,
    DimensionlessControls,
    decoherence_time,
    dwell_time,
    quasi_static_ratio,
    ratio_dec_dwell,
    ratio_first_principles,
)

__version__ = "0.1.0"
