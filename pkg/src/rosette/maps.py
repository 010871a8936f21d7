"""The rosette harmonic mappings and their constituent parts.

A rosette map of order n >= 3 and phase beta is the harmonic function

    f(z) = e^{i beta/2} h(z) + e^{-i beta/2} conj(g(z)),        |z| <= 1,

whose analytic and co-analytic parts

    h(z) = z * F_a(z^{2n}),    g(z) = z^{n-1}/(n-1) * F_c(z^{2n})

carry the hypergeometric factors of ``series`` (kinds ANALYTIC and
COANALYTIC).  Their derivatives have the closed forms

    h'(z) = 1/sqrt(1 - z^{2n}),    g'(z) = z^{n-2}/sqrt(1 - z^{2n})

with the principal square root, so the dilatation g'/h' is exactly z^{n-2}
and the Jacobian |h'|^2 - |g'|^2 simplifies to (1 - |z|^{2(n-2)})/|1 - z^{2n}|.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SingularPoint
from .series import (
    DEFAULT_POLICY,
    SeriesKind,
    SeriesSpec,
    TruncationPolicy,
    eval_series_many,
)

# Proximity of 1 - z^{2n} to zero below which derivative closed forms are refused.
SINGULAR_TOL = 1e-12

# Slack on |z| <= 1 absorbing rounding of boundary points.
EPS_DOMAIN = 1e-9


@dataclass(frozen=True)
class RosetteParams:
    """Order n >= 3 and phase beta (radians) of one rosette mapping."""

    n: int
    beta: float
    policy: TruncationPolicy = field(default=DEFAULT_POLICY)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"rosette order must satisfy n >= 3, got {self.n}")

    def canonical(self) -> tuple["RosetteParams", int]:
        """Equivalent parameters with beta in (-pi/2, pi/2] and the shift count l."""
        beta, shifts = reduce_beta(self.beta)
        return RosetteParams(self.n, beta, self.policy), shifts

    def is_canonical(self, tol: float = 1e-12) -> bool:
        return -math.pi / 2 - tol < self.beta <= math.pi / 2 + tol

    def _spec(self, kind: SeriesKind) -> SeriesSpec:
        return SeriesSpec(kind, self.n, self.policy)


@dataclass(frozen=True)
class MapValue:
    """One evaluation of a rosette map, split into its two summands.

    ``h`` is the rotated analytic part e^{i beta/2} h(z); ``gbar`` is the
    rotated, conjugated co-analytic part e^{-i beta/2} conj(g(z)).
    """

    h: complex
    gbar: complex

    @property
    def f(self) -> complex:
        return self.h + self.gbar


def _clip_disk(z: np.ndarray) -> np.ndarray:
    """Project points within EPS_DOMAIN outside the disk back onto the circle."""
    az = np.abs(z)
    if (az > 1.0 + EPS_DOMAIN).any():
        worst = z.ravel()[int(np.argmax(az))]
        raise DomainError(f"point {worst} lies outside the closed unit disk")
    over = az > 1.0
    if over.any():
        z = np.array(z, copy=True)
        z[over] /= az[over]
    return z


def h_many(params: RosetteParams, z) -> np.ndarray:
    """Analytic part h(z) = z * F_a(z^{2n}), vectorized."""
    z = _clip_disk(np.asarray(z, dtype=complex))
    factor = eval_series_many(params._spec(SeriesKind.ANALYTIC), z ** (2 * params.n))
    return z * factor


def g_many(params: RosetteParams, z) -> np.ndarray:
    """Co-analytic part g(z) = z^{n-1}/(n-1) * F_c(z^{2n}), vectorized."""
    z = _clip_disk(np.asarray(z, dtype=complex))
    factor = eval_series_many(params._spec(SeriesKind.COANALYTIC), z ** (2 * params.n))
    return z ** (params.n - 1) / (params.n - 1) * factor


def f_many(params: RosetteParams, z) -> np.ndarray:
    """Values f(z) of the rosette map, vectorized."""
    rot = cmath.exp(0.5j * params.beta)
    return rot * h_many(params, z) + np.conj(g_many(params, z)) / rot


def h(params: RosetteParams, z: complex) -> complex:
    return complex(h_many(params, np.array([z]))[0])


def g(params: RosetteParams, z: complex) -> complex:
    return complex(g_many(params, np.array([z]))[0])


def f(params: RosetteParams, z: complex) -> MapValue:
    """The rosette map at z, as the pair of its summands."""
    rot = cmath.exp(0.5j * params.beta)
    return MapValue(h=rot * h(params, z), gbar=(g(params, z).conjugate()) / rot)


# --- derivatives -------------------------------------------------------------


def _root_factor(params: RosetteParams, z: np.ndarray) -> np.ndarray:
    """Principal-branch 1/sqrt(1 - z^{2n}) with a singularity guard."""
    rad = 1.0 - z ** (2 * params.n)
    if (np.abs(rad) < SINGULAR_TOL).any():
        raise SingularPoint(
            "derivative evaluated within singular_tol of a 2n-th root of unity"
        )
    return 1.0 / np.sqrt(rad)


def dh_many(params: RosetteParams, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return _root_factor(params, z)


def dg_many(params: RosetteParams, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return z ** (params.n - 2) * _root_factor(params, z)


def dh(params: RosetteParams, z: complex) -> complex:
    return complex(dh_many(params, np.array([z]))[0])


def dg(params: RosetteParams, z: complex) -> complex:
    return complex(dg_many(params, np.array([z]))[0])


def dilatation(params: RosetteParams, z: complex) -> complex:
    """g'/h' computed directly as z^{n-2}; independent of beta, total on the disk."""
    return complex(z) ** (params.n - 2)


def jacobian(params: RosetteParams, z: complex) -> float:
    """|h'|^2 - |g'|^2 in the simplified form (1 - |z|^{2(n-2)})/|1 - z^{2n}|."""
    z = complex(z)
    rad = 1.0 - z ** (2 * params.n)
    if abs(rad) < SINGULAR_TOL:
        raise SingularPoint(
            "jacobian evaluated within singular_tol of a 2n-th root of unity"
        )
    return (1.0 - abs(z) ** (2 * (params.n - 2))) / abs(rad)


def hypocycloid(n: int, z) -> np.ndarray | complex:
    """The n-cusped hypocycloid map z + conj(z)^{n-1}/(n-1), the rosettes' baseline."""
    if n < 3:
        raise ValueError(f"hypocycloid order must satisfy n >= 3, got {n}")
    arr = np.asarray(z, dtype=complex)
    out = arr + np.conj(arr) ** (n - 1) / (n - 1)
    return complex(out) if np.isscalar(z) or arr.shape == () else out


# --- phase algebra -----------------------------------------------------------


def reduce_beta(beta_tilde: float) -> tuple[float, int]:
    """Write beta_tilde = beta + l*pi with beta in the canonical (-pi/2, pi/2].

    The interval is half open at -pi/2: an input of exactly -pi/2 maps to
    (pi/2, -1).
    """
    shifts = math.ceil((beta_tilde - math.pi / 2) / math.pi)
    beta = beta_tilde - shifts * math.pi
    if beta <= -math.pi / 2:  # float rounding at the open endpoint
        beta += math.pi
        shifts -= 1
    elif beta > math.pi / 2:
        beta -= math.pi
        shifts += 1
    return beta, shifts


def canonical_rotation(theta: float, theta_tilde: float) -> tuple[float, float]:
    """Reduce e^{i theta} h + conj(e^{i theta_tilde} g) to a rotation of a rosette map.

    Returns (gamma, beta) with the combination equal to e^{i gamma} f_beta
    pointwise.  Since f_beta splits the relative phase as e^{+-i beta/2},
    matching coefficients forces gamma = (theta - theta_tilde)/2 and
    beta = theta + theta_tilde (the full relative phase of the two parts).
    """
    return (theta - theta_tilde) / 2.0, theta + theta_tilde


def transit_identity(params: RosetteParams, z, shifts: int) -> np.ndarray:
    """Right-hand side of the phase-shift law: f_{beta+l pi}(z) expressed through f_beta.

    f_{beta + l pi}(z) = e^{i l (pi/n + pi/2)} f_beta(e^{-i l pi/n} z).
    """
    n = params.n
    pre = cmath.exp(1j * shifts * (math.pi / n + math.pi / 2))
    return pre * f_many(params, np.asarray(z, dtype=complex) * cmath.exp(-1j * shifts * math.pi / n))
