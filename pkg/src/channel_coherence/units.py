"""Conversion between SI and the natural units used internally.

Internally hbar = k_B = 1 with the second and the metre kept as the time
and length units. That fixes the remaining units:

    mass         hbar s / m^2   (~1.055e-34 kg)
    energy       hbar / s       (~1.055e-34 J)
    temperature  hbar / (k_B s) (~7.638e-12 K)
"""

from __future__ import annotations

from .errors import InputError

HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23  # J / K, exact

# SI value of one natural unit of each kind
UNIT_IN_SI = {
    "mass": HBAR,
    "energy": HBAR,
    "length": 1.0,
    "time": 1.0,
    "rate": 1.0,
    "temperature": HBAR / K_B,
    "dimensionless": 1.0,
}


def to_natural(value: float, kind: str) -> float:
    try:
        return value / UNIT_IN_SI[kind]
    except KeyError:
        raise InputError(f"unknown quantity kind {kind!r}") from None


def from_natural(value: float, kind: str) -> float:
    try:
        return value * UNIT_IN_SI[kind]
    except KeyError:
        raise InputError(f"unknown quantity kind {kind!r}") from None
