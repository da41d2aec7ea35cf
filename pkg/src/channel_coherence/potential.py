"""Asymmetric quartic double well and its harmonic ground state.

V(x) = 1/2 m omega^2 x^2 [(x/a)^2 - A (x/a) + B], natural units (hbar = 1).
With xi = x/a the stationary points solve xi (4 xi^2 - 3 A xi + 2 B) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError, NotBistable
from .numerics import Cubic, cubic_real_roots

# the asymmetric family used throughout: minima at xi = 0 and 7.5, barrier at 3
A_ASYMMETRIC = 14.0
B_ASYMMETRIC = 45.0


@dataclass(frozen=True)
class DoubleWell:
    m: float
    omega: float
    a: float
    A: float = A_ASYMMETRIC
    B: float = B_ASYMMETRIC

    def __post_init__(self):
        for name in ("m", "omega", "a"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InputError(f"{name} must be positive and finite, got {value!r}")
        if not (math.isfinite(self.A) and math.isfinite(self.B)):
            raise InputError("A and B must be finite")

    @property
    def energy_scale(self) -> float:
        """m omega^2 a^2: V(a xi) = energy_scale * (xi^4 - A xi^3 + B xi^2) / 2."""
        return self.m * self.omega**2 * self.a**2

    def reduced(self, xi: float) -> float:
        return 0.5 * xi * xi * (xi * xi - self.A * xi + self.B)


@dataclass(frozen=True)
class WellGeometry:
    xi_upper: float
    xi_barrier: float
    xi_lower: float
    epsilon0: float
    w: float
    nu: float
    barrier_height_upper: float

    @property
    def xi_separation(self) -> float:
        return abs(self.xi_lower - self.xi_upper)


def evaluate(well: DoubleWell, x: float) -> float:
    """Potential energy at position x."""
    return well.energy_scale * well.reduced(x / well.a)


def analyze(well: DoubleWell) -> WellGeometry:
    """Locate minima and barrier, and derive asymmetry energy, separation and nu.

    The higher minimum is chosen by comparing energies, not positions.
    Raises ``NotBistable`` unless A, B > 0 and 9 A^2 > 32 B.
    """
    A, B = well.A, well.B
    if not (A > 0 and B > 0 and 9.0 * A * A > 32.0 * B):
        raise NotBistable(f"A={A}, B={B} do not give two distinct positive stationary points")

    points = cubic_real_roots(Cubic(4.0, -3.0 * A, 2.0 * B, 0.0))
    if len(points) != 3:
        raise NotBistable("expected three stationary points")
    # curvature of the reduced potential: 6 xi^2 - 3 A xi + B
    curvature = [6.0 * p * p - 3.0 * A * p + B for p in points]
    left, mid, right = points
    if not (curvature[0] > 0 and curvature[1] < 0 and curvature[2] > 0):
        raise NotBistable("stationary points are not minimum-maximum-minimum")

    v_left, v_mid, v_right = (well.energy_scale * well.reduced(p) for p in points)
    if v_left >= v_right:
        xi_upper, v_upper, xi_lower, v_lower = left, v_left, right, v_right
    else:
        xi_upper, v_upper, xi_lower, v_lower = right, v_right, left, v_left

    return WellGeometry(
        xi_upper=xi_upper,
        xi_barrier=mid,
        xi_lower=xi_lower,
        epsilon0=v_upper - v_lower,
        w=abs(xi_lower - xi_upper) * well.a,
        nu=math.sqrt(B) * well.m * well.omega * well.a**2,
        barrier_height_upper=v_mid - v_upper,
    )


def omega_from_epsilon0(m: float, epsilon0: float, w: float) -> float:
    """Oscillator frequency of the A=14, B=45 well with given asymmetry and separation."""
    if not (m > 0 and epsilon0 > 0 and w > 0):
        raise InputError("m, epsilon0 and w must be positive")
    return (2.0 / w) * math.sqrt(2.0 * epsilon0 / (15.0 * m))


def asymmetric_well(m: float, epsilon0: float, w: float) -> DoubleWell:
    """The A=14, B=45 well reproducing a given (epsilon0, w) at mass m."""
    return DoubleWell(m=m, omega=omega_from_epsilon0(m, epsilon0, w), a=2.0 * w / 15.0)


def ground_state(nu: float, xi: float) -> float:
    """Unit-normalized harmonic ground state (nu/pi)^(1/4) exp(-nu xi^2 / 2)."""
    if not nu > 0:
        raise InputError("nu must be positive")
    return (nu / math.pi) ** 0.25 * math.exp(-0.5 * nu * xi * xi)


def overlap(nu: float, xi1: float) -> float:
    """Overlap of two normalized ground states displaced by xi1: exp(-nu xi1^2 / 4)."""
    if not nu > 0:
        raise InputError("nu must be positive")
    return math.exp(-0.25 * nu * xi1 * xi1)
