"""Boundary-curve geometry: derivatives, cusps, nodes, curvature.

The boundary curve of a rosette map is a(t) = f(e^{it}).  Its derivative
exists and is continuous except at the 2n multiples of pi/n, where the
radical 1/sqrt(1 - e^{2int}) blows up.  On each basic interval
((j-1)pi/n, jpi/n) the two summand derivatives have equal magnitude and a
constant angle between them of beta + (-1)^j pi/2, which gives

    |a'(t)| = sqrt(2) sqrt(1 + (-1)^(j+1) sin beta) / |sqrt(1 - e^{2int})|,

i.e. the sine term is *added* on the first half of each inter-cusp interval
(odd j) and *subtracted* on the second half (even j); for beta = pi/2 the
summands cancel on the even intervals and the boundary is constant there.
Where the derivative is non-zero its argument follows the linear law

    arg a'(t) = k pi - (n/2 - 1) t     on ((2k-2)pi/n, 2kpi/n),

so the boundary turns at the constant rate n/2 - 1 and the total curvature
between consecutive cusps is pi - 2pi/n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    IntervalCrossesCusp,
    NonCanonicalBeta,
    SingularParameter,
    WrongBeta,
)
from .maps import RosetteParams, f_many, g, h
from .series import scale_constant

TWO_PI = 2.0 * math.pi

# Distance (in t) to a multiple of pi/n below which the derivative is Undefined.
T_SINGULAR_TOL = 1e-10

# Tolerance for recognizing beta = pi/2 (the nodes-instead-of-cusps case).
BETA_HALF_PI_TOL = 1e-9

# Offsets used for the one-sided Richardson secant confirmation of features.
CONFIRM_OFFSETS = (1e-3, 1e-4, 1e-5)
CONFIRM_TOL = 5e-3


class FeatureKind(Enum):
    CUSP = "cusp"
    REMOVABLE_NODE = "removable_node"
    NODE = "node"


@dataclass(frozen=True)
class CurveSample:
    t: float
    value: complex
    d_value: Optional[complex]
    d_arg: Optional[float]
    d_mag: float


@dataclass(frozen=True)
class BoundaryFeature:
    kind: FeatureKind
    t: float
    location: complex
    magnitude: float
    argument: float
    axis_arg: Optional[float]       # cusp axis / removable-node tangent direction
    interior_angle: Optional[float]


@dataclass(frozen=True)
class FeatureReport:
    params: RosetteParams
    features: tuple[BoundaryFeature, ...]
    separations: tuple[float, ...]  # consecutive angular gaps of the feature arguments
    total_curvature_per_petal: float


class BoundaryDerivative(NamedTuple):
    d_value: complex
    d_arg: Optional[float]
    d_mag: float


def wrap_angle(x: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    y = math.fmod(x, TWO_PI)
    if y > math.pi:
        y -= TWO_PI
    elif y <= -math.pi:
        y += TWO_PI
    return y


def _reduce_t(t: float) -> float:
    t = math.fmod(t, TWO_PI)
    return t + TWO_PI if t < 0.0 else t


def interval_index(n: int, t: float) -> int:
    """Index j (1-based, 1..2n) with t in ((j-1)pi/n, jpi/n), after 2pi-reduction."""
    t = _reduce_t(t)
    j = int(math.floor(t * n / math.pi)) + 1
    return min(j, 2 * n)


def distance_to_singular(n: int, t: float) -> float:
    """Distance from t to the nearest multiple of pi/n."""
    step = math.pi / n
    r = math.fmod(t, step)
    if r < 0.0:
        r += step
    return min(r, step - r)


def boundary_points(params: RosetteParams, ts) -> np.ndarray:
    """Boundary values f(e^{it}) for an array of parameters."""
    ts = np.asarray(ts, dtype=float)
    return f_many(params, np.exp(1j * ts))


def boundary_point(params: RosetteParams, t: float) -> complex:
    return complex(boundary_points(params, np.array([t]))[0])


def _derivative_values(params: RosetteParams, ts: np.ndarray) -> np.ndarray:
    """a'(t) from the closed-form part derivatives (no series needed)."""
    n, beta = params.n, params.beta
    z = np.exp(1j * ts)
    root = np.sqrt(1.0 - z ** (2 * n))  # principal branch
    dh_dt = 1j * z / root
    dg_dt = 1j * z ** (n - 1) / root
    return cmath.exp(0.5j * beta) * dh_dt + np.conj(dg_dt) * cmath.exp(-0.5j * beta)


def _is_half_pi(beta: float) -> bool:
    return abs(beta - math.pi / 2) <= BETA_HALF_PI_TOL


def boundary_derivative(params: RosetteParams, t: float) -> BoundaryDerivative:
    """Derivative of the boundary curve at t, with closed-form magnitude and argument.

    The magnitude comes from the half-interval rule quoted in the module
    docstring, the argument from the linear turning law with branch
    k = ceil(t n / (2 pi)); both are cross-checked against d_value by the
    test-suite.  Raises SingularParameter within T_SINGULAR_TOL of a
    multiple of pi/n.
    """
    n, beta = params.n, params.beta
    t = _reduce_t(float(t))
    if distance_to_singular(n, t) < T_SINGULAR_TOL:
        raise SingularParameter(f"t={t} is within tolerance of a multiple of pi/{n}")
    j = interval_index(n, t)
    first_half = j % 2 == 1
    d_value = complex(_derivative_values(params, np.array([t]))[0])
    x = 1.0 / abs(cmath.sqrt(1.0 - cmath.exp(2j * n * t)))
    sin_term = math.sin(beta) if first_half else -math.sin(beta)
    d_mag = math.sqrt(2.0) * math.sqrt(max(1.0 + sin_term, 0.0)) * x
    if _is_half_pi(beta) and not first_half:
        return BoundaryDerivative(d_value, None, 0.0)
    k = int(math.ceil(t * n / TWO_PI))
    d_arg = k * math.pi - (n / 2.0 - 1.0) * t
    return BoundaryDerivative(d_value, d_arg, d_mag)


def curve_samples(params: RosetteParams, ts: Sequence[float]) -> list[CurveSample]:
    """Boundary samples for dumping; derivative fields are None at singular t."""
    ts = np.asarray(ts, dtype=float)
    values = boundary_points(params, ts)
    out = []
    for t, v in zip(ts, values):
        if distance_to_singular(params.n, _reduce_t(float(t))) < T_SINGULAR_TOL:
            out.append(CurveSample(float(t), complex(v), None, None, 0.0))
        else:
            d = boundary_derivative(params, float(t))
            out.append(CurveSample(float(t), complex(v), d.d_value, d.d_arg, d.d_mag))
    return out


# --- features ----------------------------------------------------------------


def _require_canonical(params: RosetteParams) -> None:
    if not (-math.pi / 2 - 1e-12 < params.beta <= math.pi / 2 + 1e-12):
        raise NonCanonicalBeta(
            f"beta={params.beta} outside (-pi/2, pi/2]; reduce it first"
        )


def feature_parameters(n: int, at_half_pi: bool) -> list[float]:
    """Parameters of the boundary features: multiples of pi/n (2pi/n at beta=pi/2)."""
    if at_half_pi:
        return [2.0 * k * math.pi / n for k in range(n)]
    return [j * math.pi / n for j in range(2 * n)]


def feature_values(params: RosetteParams) -> dict[int, complex]:
    """a(j pi/n) for j = 0..2n-1, through the exact rotation laws.

    a(j pi/n) = e^{ij pi/n} (e^{i beta/2} h(1) + (-1)^j e^{-i beta/2} g(1)),
    so only the two series values at argument exactly 1 are needed.  This
    avoids evaluating the series at arguments that merely round to 1, where
    it is far more expensive.
    """
    n, beta = params.n, params.beta
    h1 = h(params, 1.0)  # real positive
    g1 = g(params, 1.0)
    rot = cmath.exp(0.5j * beta)
    base_even = rot * h1 + g1.conjugate() / rot
    base_odd = rot * h1 - g1.conjugate() / rot
    return {
        j: cmath.exp(1j * j * math.pi / n) * (base_even if j % 2 == 0 else base_odd)
        for j in range(2 * n)
    }


def extract_features(params: RosetteParams, confirm: bool = True) -> FeatureReport:
    """Locate and classify every boundary feature of a canonical-beta rosette.

    For |beta| < pi/2: n cusps at t = 2k pi/n with axis argument 2k pi/n,
    interleaved with n removable nodes at odd multiples of pi/n whose common
    tangent direction is pi/2 + (2k-1)pi/n.  For beta = pi/2: n nodes at
    t = 2k pi/n with interior angle pi/2 - pi/n.  Feature locations come from
    the series evaluated exactly at argument 1 plus the rotation laws.  With
    ``confirm`` the one-sided tangent directions are re-estimated from
    Richardson-extrapolated secants of the curve itself and checked against
    the closed forms.
    """
    _require_canonical(params)
    n, beta = params.n, params.beta
    at_half_pi = _is_half_pi(beta)
    values = feature_values(params)
    features: list[BoundaryFeature] = []
    if at_half_pi:
        for k in range(n):
            t = 2.0 * k * math.pi / n
            loc = values[(2 * k) % (2 * n)]
            features.append(
                BoundaryFeature(
                    kind=FeatureKind.NODE,
                    t=t,
                    location=loc,
                    magnitude=abs(loc),
                    argument=_reduce_t(cmath.phase(loc)),
                    axis_arg=None,
                    interior_angle=math.pi / 2 - math.pi / n,
                )
            )
    else:
        for j in range(2 * n):
            t = j * math.pi / n
            loc = values[j]
            if j % 2 == 0:
                features.append(
                    BoundaryFeature(
                        kind=FeatureKind.CUSP,
                        t=t,
                        location=loc,
                        magnitude=abs(loc),
                        argument=_reduce_t(cmath.phase(loc)),
                        axis_arg=_reduce_t(t),
                        interior_angle=None,
                    )
                )
            else:
                features.append(
                    BoundaryFeature(
                        kind=FeatureKind.REMOVABLE_NODE,
                        t=t,
                        location=loc,
                        magnitude=abs(loc),
                        argument=_reduce_t(cmath.phase(loc)),
                        axis_arg=_reduce_t(math.pi / 2 + t),
                        interior_angle=math.pi,
                    )
                )
    if confirm:
        _confirm_features(params, features)
    args = [ft.argument for ft in features]
    seps = tuple(
        (args[(i + 1) % len(args)] - args[i]) % TWO_PI for i in range(len(args))
    )
    return FeatureReport(
        params=params,
        features=tuple(features),
        separations=seps,
        total_curvature_per_petal=math.pi - TWO_PI / n,
    )


def _richardson_secant_args(
    values_by_offset: list[complex], base: complex, offsets: Sequence[float], sign: int
) -> float:
    """Extrapolated secant direction arg(sign * (a(t0 + sign*d) - a(t0))), d -> 0."""
    raw = [cmath.phase(sign * (v - base)) for v in values_by_offset]
    # unwrap around the first estimate before extrapolating
    ref = raw[0]
    unwrapped = [ref + wrap_angle(a - ref) for a in raw]
    est = unwrapped
    ratio = offsets[0] / offsets[1]
    while len(est) > 1:  # Richardson for an O(delta) error model
        est = [
            (ratio * est[i + 1] - est[i]) / (ratio - 1.0) for i in range(len(est) - 1)
        ]
    return est[0]


def _confirm_features(params: RosetteParams, features: list[BoundaryFeature]) -> None:
    """Numerically verify one-sided tangent directions at every feature."""
    n = params.n
    at_half_pi = _is_half_pi(params.beta)
    offsets = CONFIRM_OFFSETS
    if at_half_pi:
        curve = lambda ts: halfspeed_points(params, ts)  # noqa: E731
    else:
        curve = lambda ts: boundary_points(params, ts)  # noqa: E731
    ts, sides, bases = [], [], []
    for ft in features:
        for sign in (-1, 1):
            for d in offsets:
                ts.append(ft.t + sign * d)
            sides.append(sign)
            bases.append(ft.location)
    vals = curve(np.array(ts))
    k = len(offsets)
    idx = 0
    for fi, ft in enumerate(features):
        left = _richardson_secant_args(
            list(vals[idx : idx + k]), ft.location, offsets, -1
        )
        right = _richardson_secant_args(
            list(vals[idx + k : idx + 2 * k]), ft.location, offsets, 1
        )
        idx += 2 * k
        if ft.kind is FeatureKind.CUSP:
            expected_left, expected_right = ft.t, math.pi + ft.t
        elif ft.kind is FeatureKind.REMOVABLE_NODE:
            expected_left = expected_right = ft.axis_arg
        else:  # beta = pi/2 node: exterior angle pi/2 + pi/n
            expected_left = None
            expected_right = None
            jump = wrap_angle(right - left)
            want = math.pi / 2 + math.pi / n
            if abs(wrap_angle(jump - want)) > CONFIRM_TOL:
                raise AssertionError(
                    f"node at t={ft.t}: tangent jump {jump} does not match {want}"
                )
        for got, want in ((left, expected_left), (right, expected_right)):
            if want is not None and abs(wrap_angle(got - want)) > CONFIRM_TOL:
                raise AssertionError(
                    f"{ft.kind.value} at t={ft.t}: tangent direction {got} "
                    f"does not match expected {want}"
                )


class SeparationSide(Enum):
    NODE_AFTER_CUSP = "node_after_cusp"
    CUSP_AFTER_NODE = "cusp_after_node"


def separation_angle(params: RosetteParams, side: SeparationSide) -> float:
    """Angular gap between a cusp and a neighboring removable node.

    pi/n + arctan(2 tan(pi/2n) sin beta / (1 - tan^2(pi/2n))) when the node
    has the larger argument, the minus-branch otherwise; the two branches
    sum to 2pi/n.
    """
    _require_canonical(params)
    if not abs(params.beta) < math.pi / 2:
        raise NonCanonicalBeta("separation angles require |beta| < pi/2")
    n = params.n
    tn = math.tan(math.pi / (2 * n))
    delta = math.atan(2.0 * tn * math.sin(params.beta) / (1.0 - tn * tn))
    if side is SeparationSide.NODE_AFTER_CUSP:
        return math.pi / n + delta
    return math.pi / n - delta


def _check_within_petal(params: RosetteParams, t0: float, t1: float) -> None:
    n = params.n
    if t1 < t0:
        raise IntervalCrossesCusp("need t0 <= t1")
    petal = TWO_PI / n
    k0 = math.floor((t0 + 1e-12) / petal)
    k1 = math.ceil((t1 - 1e-12) / petal) - 1
    if k1 > k0:
        raise IntervalCrossesCusp(
            f"[{t0}, {t1}] crosses a cusp parameter (multiple of 2pi/{n})"
        )
    if _is_half_pi(params.beta):
        # only the first half of each inter-cusp interval carries the curve
        if t1 - k0 * petal > math.pi / n + 1e-12:
            raise IntervalCrossesCusp(
                "for beta = pi/2 the interval must lie in the active half "
                "[(2k-2)pi/n, (2k-1)pi/n]"
            )


def total_curvature(params: RosetteParams, t0: float, t1: float) -> float:
    """Total turning of the boundary over [t0, t1] within one inter-cusp interval.

    Equal to (n/2 - 1)(t1 - t0) because the tangent argument is linear in t;
    left turns count positive.
    """
    _check_within_petal(params, t0, t1)
    return (params.n / 2.0 - 1.0) * (t1 - t0)


def total_curvature_numeric(
    params: RosetteParams, t0: float, t1: float, samples: int = 4096
) -> float:
    """Accumulated turning of sampled tangent directions (wrap-aware diffs).

    Independent of the linear-argument law: uses only the complex derivative
    values.  Endpoints are nudged off singular parameters by 1e-9.
    """
    _check_within_petal(params, t0, t1)
    eps = 1e-9
    a = t0 + eps if distance_to_singular(params.n, t0) < eps else t0
    b = t1 - eps if distance_to_singular(params.n, t1) < eps else t1
    ts = np.linspace(a, b, samples)
    keep = np.array([distance_to_singular(params.n, t) > T_SINGULAR_TOL for t in ts])
    ts = ts[keep]
    d = _derivative_values(params, ts)
    args = np.angle(d)
    diffs = np.diff(args)
    diffs = (diffs + math.pi) % TWO_PI - math.pi
    # reported as a magnitude, consistent with the analytic formula
    return float(abs(np.sum(diffs)))


def halfspeed_points(params: RosetteParams, ts) -> np.ndarray:
    """The continuous half-speed reparametrization of the beta = pi/2 boundary.

    On [(2k-2)pi/n, 2k pi/n) the curve equals a((k-1)pi/n + t/2): it traverses
    each active half-interval at half speed and skips the constancy arcs,
    visiting the node exactly at t = 2k pi/n.
    """
    if not _is_half_pi(params.beta):
        raise WrongBeta("half-speed reparametrization requires beta = pi/2")
    n = params.n
    ts = np.asarray(ts, dtype=float)
    red = np.mod(ts, TWO_PI)
    k = np.floor(red * n / TWO_PI)  # zero-based inter-cusp interval counter
    mapped = k * math.pi / n + red / 2.0
    out = boundary_points(params, mapped)
    # parameters that round onto a multiple of pi/n get the exact feature value
    step = math.pi / n
    j_near = np.rint(mapped / step).astype(int)
    snap = np.abs(mapped - j_near * step) < 1e-9
    if snap.any():
        exact = feature_values(params)
        for i in np.flatnonzero(snap):
            out[i] = exact[int(j_near[i]) % (2 * n)]
    return out


def halfspeed_reparam(params: RosetteParams, t: float) -> complex:
    return complex(halfspeed_points(params, np.array([t]))[0])


def boundary_parameter_grid(
    n: int, per_interval: int = 512, refine: int = 4, band_frac: float = 0.1
) -> np.ndarray:
    """Sampling parameters on [0, 2pi): midpoint-uniform per basic interval,
    with ``refine``-times denser coverage in a band near each feature parameter."""
    step = math.pi / n
    cells = []
    base = (np.arange(per_interval) + 0.5) / per_interval
    band_count = max(1, int(per_interval * band_frac * refine))
    extra_lo = band_frac * (np.arange(band_count) + 0.5) / band_count
    extra_hi = 1.0 - band_frac + extra_lo
    local = np.unique(np.concatenate([base, extra_lo, extra_hi]))
    for j in range(2 * n):
        cells.append((j + local) * step)
    return np.concatenate(cells)


def detect_arg_nonmonotonicity(
    params: RosetteParams, per_interval: int = 512
) -> tuple[bool, Optional[float]]:
    """Scan arg a(t) on a fine grid for an interval of strict decrease.

    Returns (found, witness_t) with the witness at the midpoint of a grid
    step on which the unwrapped argument decreases by more than 1e-6 rad.
    """
    _require_canonical(params)
    ts = boundary_parameter_grid(params.n, per_interval, refine=2)
    vals = boundary_points(params, ts)
    args = np.unwrap(np.angle(vals))
    diffs = np.diff(args)
    dec = np.flatnonzero(diffs < -1e-6)
    if dec.size == 0:
        return False, None
    i = int(dec[np.argmin(diffs[dec])])
    return True, float(0.5 * (ts[i] + ts[i + 1]))


# --- generic singular-point classification -----------------------------------


class SingularPointEstimate(NamedTuple):
    t: float
    location: complex
    left_arg: float
    right_arg: float
    kind: FeatureKind


def classify_singular_point(
    curve_fn: Callable[[np.ndarray], np.ndarray],
    t0: float,
    location: Optional[complex] = None,
    offsets: Sequence[float] = CONFIRM_OFFSETS,
) -> SingularPointEstimate:
    """Classify an isolated singular point of any closed curve numerically.

    One-sided tangent directions are Richardson-extrapolated from secants;
    the point is a cusp when they differ by pi (mod 2pi), a removable node
    when they agree, and a node otherwise.  Shared by the rosette feature
    confirmation pass and the hypocycloid baseline check.
    """
    base = complex(curve_fn(np.array([t0]))[0]) if location is None else location
    left_vals = list(curve_fn(t0 - np.asarray(offsets)))
    right_vals = list(curve_fn(t0 + np.asarray(offsets)))
    left = _richardson_secant_args(left_vals, base, offsets, -1)
    right = _richardson_secant_args(right_vals, base, offsets, 1)
    jump = abs(wrap_angle(right - left))
    if abs(jump - math.pi) < CONFIRM_TOL:
        kind = FeatureKind.CUSP
    elif jump < CONFIRM_TOL:
        kind = FeatureKind.REMOVABLE_NODE
    else:
        kind = FeatureKind.NODE
    return SingularPointEstimate(t0, base, left, right, kind)


def bounding_radius(n: int) -> float:
    """Radius of the circle that always encloses the order-n rosette image."""
    return scale_constant(n) * (1.0 + math.tan(math.pi / (2 * n)))
