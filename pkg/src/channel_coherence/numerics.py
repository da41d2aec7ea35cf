"""Numerical kernel: cubic roots, quadrature over the real line, stable coth."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegenerateCubic, InputError, NonConvergence, PoleAtZero

DEFAULT_TOLERANCE = 1e-10
EVALUATION_BUDGET = 10**6

# coth(20) - 1 = 2 exp(-40) ~ 8.5e-18, below double resolution at 1.0
_COTH_SATURATION = 20.0


@dataclass(frozen=True)
class Cubic:
    """c3*x**3 + c2*x**2 + c1*x + c0."""

    c3: float
    c2: float
    c1: float
    c0: float

    def __call__(self, x: float) -> float:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x: float) -> float:
        return (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.c3), abs(self.c2), abs(self.c1), abs(self.c0))


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _quadratic_real_roots(a: float, b: float, c: float) -> list[float]:
    if c == 0.0:
        return [0.0, -b / a]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    # avoid cancellation between -b and sqrt(disc)
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    return [q / a, c / q]


def _polish(c: Cubic, r: float) -> float:
    # single Newton step, kept only if it reduces the residual
    d = c.derivative(r)
    if d == 0.0:
        return r
    candidate = r - c(r) / d
    return candidate if abs(c(candidate)) <= abs(c(r)) else r


def cubic_real_roots(c: Cubic | tuple[float, float, float, float]) -> list[float]:
    """Real roots of a cubic in ascending order, repeated by multiplicity.

    Closed-form solution (trigonometric for three real roots, Cardano for
    one) followed by one Newton polish per root. A cubic with one real root
    and a complex pair returns a single value.
    """
    if not isinstance(c, Cubic):
        c = Cubic(*map(float, c))
    if c.c3 == 0.0:
        raise DegenerateCubic("leading coefficient c3 must be non-zero")

    if c.c0 == 0.0 and (c.c1 != 0.0 or c.c2 != 0.0):
        # exact root at the origin; solve the remaining quadratic directly
        return sorted([0.0] + _quadratic_real_roots(c.c3, c.c2, c.c1))

    a = c.c2 / c.c3
    b = c.c1 / c.c3
    d = c.c0 / c.c3
    shift = -a / 3.0
    p = b - a * a / 3.0
    q = 2.0 * a**3 / 27.0 - a * b / 3.0 + d

    half_q = q / 2.0
    third_p = p / 3.0
    disc = half_q * half_q + third_p**3
    size = max(half_q * half_q, abs(third_p) ** 3)

    if size == 0.0:
        roots = [shift] * 3
    elif disc > 1e-14 * size:
        sq = math.sqrt(disc)
        u = _cbrt(-half_q - math.copysign(sq, half_q))
        v = -third_p / u if u != 0.0 else 0.0
        roots = [u + v + shift]
    else:
        # three real roots, possibly with a double one
        m = 2.0 * math.sqrt(-third_p)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        phi = math.acos(arg) / 3.0
        roots = [m * math.cos(phi - 2.0 * math.pi * k / 3.0) + shift for k in range(3)]

    return sorted(_polish(c, r) + 0.0 for r in roots)


# Gauss-Kronrod 7/15 abscissae on [-1, 1], non-negative half
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
# Gauss weights for _XGK[1], _XGK[3], _XGK[5], _XGK[7]
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_K_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
_G_WEIGHTS = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    _G_WEIGHTS[_i] = _w
    _G_WEIGHTS[14 - _i] = _w
_G_WEIGHTS[7] = _WG[3]


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    try:
        y = np.asarray(f(x), dtype=float)
        if y.shape == x.shape:
            return y
    except (TypeError, ValueError):
        pass
    return np.array([float(f(float(xi))) for xi in x.ravel()]).reshape(x.shape)


def _t_of_u(u: np.ndarray) -> np.ndarray:
    # inverse of u = t / (1 - t**2)
    return 2.0 * u / (1.0 + np.sqrt(1.0 + 4.0 * u * u))


def integrate_line(
    f: Callable,
    tolerance: float = DEFAULT_TOLERANCE,
    *,
    center: float = 0.0,
    scale: float = 1.0,
    budget: int = EVALUATION_BUDGET,
) -> QuadratureResult:
    """Integrate ``f`` over the whole real line.

    The line is mapped onto (-1, 1) by x = center + scale * t / (1 - t**2)
    and integrated with adaptive Gauss-Kronrod 7/15 panels. The initial
    panels are the images of a uniform grid of spacing 0.25 over
    |u| <= 16, so narrow peaks away from ``center`` are not missed.

    ``f`` may be vectorized over numpy arrays; scalar-only callables are
    detected and evaluated point by point. Raises ``NonConvergence`` when
    the summed error estimate is still above ``tolerance`` after ``budget``
    evaluations.
    """
    if not tolerance > 0.0:
        raise InputError("tolerance must be positive")
    if not scale > 0.0:
        raise InputError("scale must be positive")

    def panels(lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        t = mid[:, None] + half[:, None] * _NODES[None, :]
        one_minus = 1.0 - t * t
        u = t / one_minus
        jac = scale * (1.0 + t * t) / (one_minus * one_minus)
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            y = _evaluate(f, center + scale * u) * jac
        y = np.where(np.isfinite(jac), y, 0.0)
        if not np.all(np.isfinite(y)):
            raise NonConvergence("integrand is not finite on the integration path")
        k = half * (y @ _K_WEIGHTS)
        g = half * (y @ _G_WEIGHTS)
        return k, np.abs(k - g)

    grid = _t_of_u(np.arange(-64, 65) * 0.25)
    edges = np.concatenate([[-1.0], grid, [1.0]])
    lo, hi = edges[:-1], edges[1:]
    vals, errs = panels(lo, hi)
    evaluations = 15 * lo.size

    while errs.sum() > tolerance:
        if evaluations >= budget:
            raise NonConvergence(
                f"error estimate {errs.sum():.3g} above tolerance {tolerance:.3g} "
                f"after {evaluations} evaluations"
            )
        widths = hi - lo
        split = errs > tolerance * widths / 2.0
        if not split.any():
            split = errs == errs.max()
        # never split below a resolvable width
        split &= widths > 1e-14
        if not split.any():
            raise NonConvergence("panels cannot be refined further")
        mid = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate([lo[split], mid])
        new_hi = np.concatenate([mid, hi[split]])
        nv, ne = panels(new_lo, new_hi)
        evaluations += 15 * new_lo.size
        keep = ~split
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])

    order = np.argsort(lo)
    value = math.fsum(vals[order])
    return QuadratureResult(value=value, error_estimate=float(errs.sum()), evaluations=int(evaluations))


def coth_stable(x: float) -> float:
    """coth(x) without overflow; exactly +/-1 once |x| >= 20."""
    x = float(x)
    if x == 0.0:
        raise PoleAtZero("coth has a pole at 0")
    if math.isnan(x):
        raise InputError("coth of NaN")
    if abs(x) >= _COTH_SATURATION:
        return math.copysign(1.0, x)
    return 1.0 / math.tanh(x)
