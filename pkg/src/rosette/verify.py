"""Numerical certification: winding numbers, univalence, integral identities,
symmetry identities, and fundamental-set tiling.

Univalence is certified through the argument principle for harmonic
functions: the boundary polyline must be a simple positively oriented closed
curve, every interior image point must be wound exactly once, and every
probe outside the bounding circle exactly zero times.  The fundamental-set
check reconstructs the whole image as n rotated copies of the image of the
sector arg z in [0, 2pi/n) and verifies disjoint interiors plus full
coverage.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy import integrate

from .boundary import (
    boundary_parameter_grid,
    boundary_points,
    bounding_radius,
    feature_parameters,
    feature_values,
    halfspeed_points,
    wrap_angle,
)
from .errors import OpenCurve, QuadratureFailure, TooCloseToCurve
from .maps import (
    RosetteParams,
    dg_many,
    dh_many,
    f_many,
    g_many,
    h_many,
    transit_identity,
)
from .series import SeriesKind, scale_constant

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class WindingResult:
    point: complex
    winding: int
    min_distance_to_curve: float


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_residual: float
    samples_used: int
    details: Optional[dict] = None


@dataclass
class VerificationReport:
    params: RosetteParams
    checks: list[CheckResult]
    seed: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class FundamentalSet:
    """Image of the closed sector arg z in [0, 2pi/n); its boundary polyline is closed."""

    params: RosetteParams
    sector: tuple[float, float]
    boundary_polyline: np.ndarray


@dataclass(frozen=True)
class RotatedCopy:
    prefactor: complex
    polyline: np.ndarray


class IntegralCheck(NamedTuple):
    lhs: complex
    rhs: complex
    residual: float


# --- winding numbers ----------------------------------------------------------


def _segment_distances(pts: np.ndarray, w0: complex) -> np.ndarray:
    a = pts[:-1]
    b = pts[1:]
    ab = b - a
    denom = np.abs(ab) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        t = ((w0 - a) * np.conj(ab)).real / denom
    t = np.nan_to_num(t, nan=0.0)
    t = np.clip(t, 0.0, 1.0)
    return np.abs(w0 - (a + t * ab))


def min_distance_to_curve(curve, w0: complex) -> float:
    pts = np.asarray(curve, dtype=complex)
    return float(_segment_distances(pts, w0).min())


def _ensure_closed(pts: np.ndarray) -> np.ndarray:
    scale = float(np.abs(pts).max()) or 1.0
    if abs(pts[0] - pts[-1]) > 1e-9 * scale:
        raise OpenCurve("curve endpoints do not coincide")
    pts = np.array(pts, copy=True)
    pts[-1] = pts[0]
    return pts


def winding_number(
    curve, w0: complex, exclusion_radius: Optional[float] = None
) -> WindingResult:
    """Integer winding of a closed polyline around w0.

    Accumulates wrapped argument increments of curve - w0, subdividing any
    segment whose increment reaches pi/2 until all increments are small.
    Raises TooCloseToCurve when w0 is within the exclusion radius of a
    segment, and OpenCurve when the polyline is not closed.
    """
    pts = _ensure_closed(np.asarray(curve, dtype=complex))
    if exclusion_radius is None:
        exclusion_radius = 1e-9 * float(np.abs(pts - w0).max())
    mind = float(_segment_distances(pts, w0).min())
    if mind <= exclusion_radius:
        raise TooCloseToCurve(
            f"probe at distance {mind:.3e} <= exclusion radius {exclusion_radius:.3e}"
        )
    rel = pts - w0
    for _ in range(64):
        ang = np.angle(rel)
        diffs = np.diff(ang)
        diffs = (diffs + math.pi) % TWO_PI - math.pi
        big = np.abs(diffs) >= math.pi / 2
        if not big.any():
            break
        # insert midpoints on offending segments; winding of the polyline is unchanged
        idx = np.flatnonzero(big)
        mids = 0.5 * (rel[idx] + rel[idx + 1])
        rel = np.insert(rel, idx + 1, mids)
    total = float(diffs.sum()) / TWO_PI
    w = round(total)
    if abs(total - w) > 0.25:
        raise TooCloseToCurve(f"winding sum {total} did not settle near an integer")
    return WindingResult(point=complex(w0), winding=int(w), min_distance_to_curve=mind)


def winding_numbers(
    curve, points, exclusion_radius: float, chunk: int = 64
) -> list[WindingResult]:
    """Batch winding numbers for many probes against one closed polyline."""
    pts = _ensure_closed(np.asarray(curve, dtype=complex))
    probes = np.asarray(points, dtype=complex).ravel()
    results: list[WindingResult] = []
    for i0 in range(0, probes.size, chunk):
        block = probes[i0 : i0 + chunk]
        rel = pts[None, :] - block[:, None]
        ang = np.angle(rel)
        diffs = np.diff(ang, axis=1)
        diffs = (diffs + math.pi) % TWO_PI - math.pi
        ok = np.abs(diffs).max(axis=1) < math.pi / 2
        totals = diffs.sum(axis=1) / TWO_PI
        for k, w0 in enumerate(block):
            dmin = float(_segment_distances(pts, complex(w0)).min())
            if dmin <= exclusion_radius:
                raise TooCloseToCurve(
                    f"probe {w0} at distance {dmin:.3e} from the curve"
                )
            if ok[k]:
                results.append(WindingResult(complex(w0), round(float(totals[k])), dmin))
            else:  # rare: fall back to the adaptive scalar path
                results.append(winding_number(pts, complex(w0), exclusion_radius))
    return results


# --- polyline simplicity ------------------------------------------------------


def count_self_intersections(pts: np.ndarray, chunk: int = 1024) -> int:
    """Number of properly crossing non-adjacent segment pairs of a closed polyline."""
    pts = _ensure_closed(np.asarray(pts, dtype=complex))
    a = pts[:-1]
    b = pts[1:]
    n = a.size
    ax, ay, bx, by = a.real, a.imag, b.real, b.imag
    lo_x, hi_x = np.minimum(ax, bx), np.maximum(ax, bx)
    lo_y, hi_y = np.minimum(ay, by), np.maximum(ay, by)
    count = 0
    for i0 in range(0, n, chunk):
        i1 = min(i0 + chunk, n)
        for j0 in range(i0, n, chunk):
            j1 = min(j0 + chunk, n)
            ii, jj = np.meshgrid(np.arange(i0, i1), np.arange(j0, j1), indexing="ij")
            mask = jj > ii + 1
            mask &= ~((ii == 0) & (jj == n - 1))  # wrap adjacency
            mask &= ~(
                (lo_x[ii] > hi_x[jj])
                | (lo_x[jj] > hi_x[ii])
                | (lo_y[ii] > hi_y[jj])
                | (lo_y[jj] > hi_y[ii])
            )
            if not mask.any():
                continue
            i_s, j_s = ii[mask], jj[mask]
            d1 = _cross(b[i_s] - a[i_s], a[j_s] - a[i_s])
            d2 = _cross(b[i_s] - a[i_s], b[j_s] - a[i_s])
            d3 = _cross(b[j_s] - a[j_s], a[i_s] - a[j_s])
            d4 = _cross(b[j_s] - a[j_s], b[i_s] - a[j_s])
            count += int(np.count_nonzero((d1 * d2 < 0.0) & (d3 * d4 < 0.0)))
    return count


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u.real * v.imag - u.imag * v.real


def _dedupe(pts: np.ndarray, tol: float) -> np.ndarray:
    keep = np.ones(pts.size, dtype=bool)
    keep[1:] = np.abs(np.diff(pts)) > tol
    return pts[keep]


# --- boundary polylines -------------------------------------------------------


def boundary_polyline(
    params: RosetteParams, per_interval: int = 512, halfspeed: Optional[bool] = None
) -> np.ndarray:
    """Closed polyline through the boundary curve (half-speed at beta = pi/2).

    Samples every basic interval at offset grid points plus the exact
    feature parameters, so cusps and nodes are vertices of the polyline.
    The feature vertices come from the rotation laws (series evaluated at
    argument exactly 1), never from near-singular parameters.
    """
    n = params.n
    if halfspeed is None:
        halfspeed = abs(params.beta - math.pi / 2) <= 1e-9
    exact = feature_values(params)
    grid = boundary_parameter_grid(n, per_interval, refine=2)
    if halfspeed:
        vals = halfspeed_points(params, grid)
        ft_ts = np.array(feature_parameters(n, at_half_pi=True))
        ft_vals = np.array([exact[(2 * k) % (2 * n)] for k in range(n)])
    else:
        vals = boundary_points(params, grid)
        ft_ts = np.array(feature_parameters(n, at_half_pi=False))
        ft_vals = np.array([exact[j] for j in range(2 * n)])
    all_ts = np.concatenate([grid, ft_ts])
    all_vals = np.concatenate([vals, ft_vals])
    order = np.argsort(all_ts)
    out = _dedupe(all_vals[order], 1e-13 * scale_constant(n))
    return np.append(out, out[0])


# --- univalence ----------------------------------------------------------------


def _interior_grid(resolution: int, r_max: float = 0.95) -> np.ndarray:
    i = (np.arange(resolution) + 0.5) / resolution
    r = r_max * np.sqrt(i)
    th = TWO_PI * (np.arange(resolution) + 0.5) / resolution
    return (r[:, None] * np.exp(1j * th)[None, :]).ravel()


def univalence_scan(
    params: RosetteParams,
    grid_resolution: int = 24,
    per_interval: Optional[int] = None,
    exterior_probes: int = 64,
    margin: float = 0.25,
    seed: int = 0,
) -> VerificationReport:
    """Certify injectivity numerically for one canonical-beta rosette.

    (a) the sampled boundary polyline has no self-intersections; (b) images
    of an interior z-grid have winding number 1 and probes beyond the
    bounding circle have winding 0; (c) the grid images are pairwise
    distinct (pigeonhole injectivity), with the minimum separation reported.
    """
    n = params.n
    if per_interval is None:
        per_interval = max(320, -(-4096 // (2 * n)))
    poly = boundary_polyline(params, per_interval)
    checks: list[CheckResult] = []

    crossings = count_self_intersections(poly)
    checks.append(
        CheckResult(
            "boundary_simple",
            crossings == 0,
            float(crossings),
            poly.size - 1,
            {"segments": poly.size - 1},
        )
    )

    scale = scale_constant(n)
    exclusion = 1e-6 * scale
    zgrid = _interior_grid(grid_resolution)
    probes = f_many(params, zgrid)
    res = winding_numbers(poly, probes, exclusion)
    worst = max(abs(r.winding - 1) for r in res)
    checks.append(
        CheckResult(
            "interior_winding_one",
            worst == 0,
            float(worst),
            len(res),
            {"min_curve_distance": min(r.min_distance_to_curve for r in res)},
        )
    )

    radius = bounding_radius(n) + margin * scale
    ring = radius * np.exp(1j * TWO_PI * (np.arange(exterior_probes) + 0.37) / exterior_probes)
    res_out = winding_numbers(poly, ring, exclusion)
    worst_out = max(abs(r.winding) for r in res_out)
    checks.append(
        CheckResult(
            "exterior_winding_zero", worst_out == 0, float(worst_out), len(res_out)
        )
    )

    min_sep = _min_pairwise_distance(probes)
    checks.append(
        CheckResult(
            "grid_images_distinct",
            min_sep > 0.0,
            0.0 if min_sep > 0.0 else 1.0,
            probes.size,
            {"min_separation": min_sep},
        )
    )
    return VerificationReport(params=params, checks=checks, seed=seed)


def _min_pairwise_distance(pts: np.ndarray, chunk: int = 512) -> float:
    best = math.inf
    n = pts.size
    for i0 in range(0, n, chunk):
        block = pts[i0 : i0 + chunk]
        tail = pts[i0:]
        d = np.abs(block[:, None] - tail[None, :])
        # keep strictly upper-triangular pairs (global j > global i)
        rows = np.arange(block.size)[:, None]
        cols = np.arange(tail.size)[None, :]
        vals = d[cols > rows]
        if vals.size:
            best = min(best, float(vals.min()))
    return best


# --- integral identities --------------------------------------------------------


def integral_oracle(
    params: RosetteParams, z: complex, kind: SeriesKind = SeriesKind.ANALYTIC
) -> IntegralCheck:
    """Compare the antiderivative integrals with the series closed forms.

    lhs integrates 1/sqrt(1 - zeta^{2n}) (analytic) or
    zeta^{n-2}/sqrt(1 - zeta^{2n}) (co-analytic) along the straight segment
    [0, z] by adaptive Gauss-Kronrod quadrature; rhs evaluates h(z) or g(z)
    through the series.  Near |z| = 1 the substitution zeta = z(1 - u^2)
    removes the inverse-square-root endpoint singularity.
    """
    z = complex(z)
    n = params.n

    def radical(zeta):
        return 1.0 / np.sqrt(1.0 - zeta ** (2 * n))

    if kind is SeriesKind.ANALYTIC:
        integrand = radical
        rhs = complex(h_many(params, np.array([z]))[0])
    else:
        integrand = lambda zeta: zeta ** (n - 2) * radical(zeta)  # noqa: E731
        rhs = complex(g_many(params, np.array([z]))[0])

    near_singular = abs(1.0 - z ** (2 * n)) < 0.25 or abs(z) > 0.999

    if near_singular:
        func = lambda u: integrand(z * (1.0 - u * u)) * 2.0 * z * u  # noqa: E731
    else:
        func = lambda tau: integrand(z * tau) * z  # noqa: E731

    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            lhs, err = integrate.quad(
                func, 0.0, 1.0, complex_func=True, epsabs=1e-13, epsrel=1e-13, limit=400
            )
        except integrate.IntegrationWarning as exc:
            raise QuadratureFailure(str(exc)) from exc
    if abs(err) > 1e-10:
        raise QuadratureFailure(f"quadrature error estimate {abs(err):.3e} too large")
    return IntegralCheck(lhs=complex(lhs), rhs=rhs, residual=abs(complex(lhs) - rhs))


# --- symmetry and pointwise identities ------------------------------------------


def _disk_samples(rng: np.random.Generator, count: int, r_max: float = 0.97) -> np.ndarray:
    r = r_max * np.sqrt(rng.uniform(0.0, 1.0, count))
    th = rng.uniform(0.0, TWO_PI, count)
    return r * np.exp(1j * th)


def symmetry_suite(
    params: RosetteParams, sample_count: int = 1000, seed: int = 42
) -> VerificationReport:
    """Evaluate every pointwise identity of the mapping layer at seeded samples."""
    n = params.n
    beta = params.beta
    rng = np.random.default_rng(seed)
    z = _disk_samples(rng, sample_count)
    checks: list[CheckResult] = []

    def add(name: str, residual: float, samples: int, threshold: float, details=None):
        checks.append(CheckResult(name, residual <= threshold, residual, samples, details))

    # n-fold rotational symmetry with random k
    k = rng.integers(1, n, sample_count)
    rot = np.exp(2j * math.pi * k / n)
    res = np.abs(f_many(params, rot * z) - rot * f_many(params, z)).max()
    add("rotational_symmetry", float(res), sample_count, 1e-10)

    # 2n-fold summand rotation laws with random j
    j = rng.integers(1, 2 * n, sample_count)
    rot_j = np.exp(1j * math.pi * j / n)
    res_h = np.abs(h_many(params, rot_j * z) - rot_j * h_many(params, z)).max()
    sign = (-1.0) ** j
    res_g = np.abs(g_many(params, rot_j * z) - sign / rot_j * g_many(params, z)).max()
    add("summand_rotation", float(max(res_h, res_g)), sample_count, 1e-10)

    # reflection: f_beta(conj z) = conj(f_{-beta}(z))
    mirrored = RosetteParams(n, -beta, params.policy)
    res = np.abs(f_many(params, np.conj(z)) - np.conj(f_many(mirrored, z))).max()
    add("reflection_conjugation", float(res), sample_count, 1e-10)

    # half-turn phase shift: f_beta(z) = e^{-i(pi/2+pi/n)} f_{beta+pi}(e^{i pi/n} z)
    shifted = RosetteParams(n, beta + math.pi, params.policy)
    pre = cmath.exp(-1j * (math.pi / 2 + math.pi / n))
    res = np.abs(
        f_many(params, z) - pre * f_many(shifted, np.exp(1j * math.pi / n) * z)
    ).max()
    add("half_turn_shift", float(res), sample_count, 1e-10)

    # beta = pi/2 reflection axis law
    half = RosetteParams(n, math.pi / 2, params.policy)
    eta = math.pi / (2 * n) - math.pi / 4
    gam = cmath.exp(-1j * math.pi / (2 * n))
    lhs = cmath.exp(1j * eta) * f_many(half, gam * np.conj(z))
    rhs = np.conj(cmath.exp(1j * eta) * f_many(half, gam * z))
    add("half_pi_reflection", float(np.abs(lhs - rhs).max()), sample_count, 1e-10)

    # reduction to canonical beta through the phase-shift law
    canonical, shifts = params.canonical()
    res = np.abs(f_many(params, z) - transit_identity(canonical, z, shifts)).max()
    add("phase_reduction", float(res), sample_count, 1e-10, {"shifts": shifts})

    # dilatation is exactly z^(n-2)
    zs = z[np.abs(1.0 - z ** (2 * n)) > 1e-6]
    quot = dg_many(params, zs) / dh_many(params, zs)
    res = np.abs(quot / zs ** (n - 2) - 1.0)[zs != 0].max() if zs.size else 0.0
    add("dilatation_quotient", float(res), zs.size, 1e-12)

    # Jacobian positivity on the same samples
    jac = (1.0 - np.abs(zs) ** (2 * (n - 2))) / np.abs(1.0 - zs ** (2 * n))
    worst = float(-(jac.min())) if jac.size else -1.0
    add("jacobian_positive", max(worst, 0.0), zs.size, 0.0)

    # Wirtinger reconstruction vs symmetric finite differences
    sub = z[: min(100, z.size)] * 0.9
    delta = 1e-5
    rot_b = cmath.exp(0.5j * beta)
    fx = (f_many(params, sub + delta) - f_many(params, sub - delta)) / (2 * delta)
    fy = (f_many(params, sub + 1j * delta) - f_many(params, sub - 1j * delta)) / (
        2 * delta
    )
    hp = rot_b * dh_many(params, sub)
    gp = np.conj(dg_many(params, sub)) / rot_b
    res = max(np.abs(fx - (hp + gp)).max(), np.abs(fy - 1j * (hp - gp)).max())
    add("wirtinger_consistency", float(res), sub.size, 1e-6)

    # radial behavior along the two distinguished rays
    r = np.linspace(1e-3, 0.999, 400)
    canon_beta = canonical.beta
    if 0.0 < canon_beta <= math.pi / 2:
        p = canonical
        rays = [1.0, cmath.exp(1j * math.pi / n)]
        worst = 0.0
        for ray, arg_increases in zip(rays, (False, True)):
            vals = f_many(p, r * ray)
            mono = np.diff(np.abs(vals))
            worst = max(worst, float(max(0.0, -(mono.min()))))
            dr = _radial_derivative(p, r, ray)
            dargs = np.diff(np.unwrap(np.angle(dr)))
            # the tangent argument falls along ray 1 and rises along ray e^{i pi/n}
            violation = max(0.0, dargs.max() if not arg_increases else -dargs.min())
            worst = max(worst, float(violation))
        add("radial_monotonicity", worst, r.size, 1e-12)

    # straight rays of the beta = 0 mapping
    flat = RosetteParams(n, 0.0, params.policy)
    v0 = f_many(flat, r)
    v1 = f_many(flat, r * cmath.exp(1j * math.pi / n))
    res = max(
        np.abs(np.angle(v0)).max(),
        np.abs(np.angle(v1 * cmath.exp(-1j * math.pi / n))).max(),
    )
    add("ray_straightness", float(res), 2 * r.size, 1e-10)

    return VerificationReport(params=params, checks=checks, seed=seed)


def _radial_derivative(params: RosetteParams, r: np.ndarray, ray: complex) -> np.ndarray:
    z = r * ray
    rot = cmath.exp(0.5j * params.beta)
    return ray * rot * dh_many(params, z) + np.conj(ray * dg_many(params, z)) / rot


# --- fundamental sets -----------------------------------------------------------


@dataclass(frozen=True)
class CoverageReport:
    passed: bool
    probes: int
    violations: int
    tolerance: float
    count_histogram: dict
    vertex_angle: float
    half_sector_angles: tuple[float, float]
    min_separation_scale: float


def fundamental_set(params: RosetteParams, per_interval: int = 768, radial: int = 600) -> FundamentalSet:
    """Boundary polyline of the image of the sector arg z in [0, 2pi/n).

    Three sides: the radial image f(r), the boundary arc over [0, 2pi/n]
    (its endpoints and midpoint taken exactly from the rotation laws), and
    the rotated radial image f(r e^{2 pi i/n}) traversed back to the origin.
    """
    canonical, _ = params.canonical()
    n = canonical.n
    u = np.linspace(0.0, 1.0, radial)
    r = np.sin(0.5 * math.pi * u) ** 2  # clustered toward r = 1
    side1 = f_many(canonical, r[:-1])  # endpoint a(0) appended exactly below
    exact = feature_values(canonical)
    mids = (np.arange(per_interval) + 0.5) / per_interval * math.pi / n
    arc = np.concatenate(
        [
            [exact[0]],
            boundary_points(canonical, mids),
            [exact[1]],
            boundary_points(canonical, mids + math.pi / n),
            [exact[2 % (2 * n)]],
        ]
    )
    side2 = (np.append(side1, exact[0]) * cmath.exp(2j * math.pi / n))[::-1]
    poly = np.concatenate([side1, arc, side2[1:]])
    poly = _dedupe(poly, 1e-13 * scale_constant(n))
    if abs(poly[0] - poly[-1]) > 1e-13 * scale_constant(n):
        poly = np.append(poly, poly[0])
    else:
        poly[-1] = poly[0]
    return FundamentalSet(
        params=canonical, sector=(0.0, TWO_PI / n), boundary_polyline=poly
    )


def rotated_copies(params: RosetteParams) -> tuple[list[RotatedCopy], FundamentalSet, int]:
    """The n rotated copies whose union reconstructs the full image.

    For params with arbitrary beta = canonical + l*pi the copies are
    i^l e^{i(2k+l)pi/n} times the canonical fundamental set, k = 1..n.
    """
    base = fundamental_set(params)
    _, shifts = params.canonical()
    n = params.n
    copies = []
    for k in range(1, n + 1):
        pref = cmath.exp(1j * (shifts * math.pi / 2 + (2 * k + shifts) * math.pi / n))
        copies.append(RotatedCopy(prefactor=pref, polyline=pref * base.boundary_polyline))
    return copies, base, shifts


def fundamental_decomposition(
    params: RosetteParams,
    probe_grid: int = 100,
    r_max: float = 0.98,
) -> tuple[list[RotatedCopy], CoverageReport]:
    """Tile the image of the full map by the n rotated fundamental-set copies.

    Every image of a dense polar z-grid must lie in exactly one rotated copy;
    probes within 1e-6 * scale of some copy boundary are exempt (shared
    boundary arcs).  Also reports the angle subtended at the origin by the
    set (2pi/n) and by its two half-sector pieces (pi/n each).
    """
    copies, base, _ = rotated_copies(params)
    n = params.n
    scale = scale_constant(n)
    tol = 1e-6 * scale

    i = (np.arange(probe_grid) + 0.5) / probe_grid
    radii = r_max * np.sqrt(i)
    angles = TWO_PI * (np.arange(probe_grid) + 0.5) / probe_grid
    zgrid = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    probes = f_many(params, zgrid)

    counts = np.zeros(probes.size, dtype=int)
    for copy in copies:
        counts += _points_inside(copy.polyline, probes)

    suspect = np.flatnonzero(counts != 1)
    violations = 0
    for idx in suspect:
        d = min(min_distance_to_curve(c.polyline, complex(probes[idx])) for c in copies)
        if d > tol:
            violations += 1

    hist = {int(c): int((counts == c).sum()) for c in np.unique(counts)}

    # vertex geometry at the origin from tiny-radius secants
    r0 = 1e-6
    canonical = base.params
    v_side = f_many(canonical, np.array([r0, r0 * cmath.exp(1j * math.pi / n), r0 * cmath.exp(2j * math.pi / n)]))
    a0, a1, a2 = (cmath.phase(complex(v)) for v in v_side)
    vertex_angle = (a2 - a0) % TWO_PI
    half_angles = ((a1 - a0) % TWO_PI, (a2 - a1) % TWO_PI)

    report = CoverageReport(
        passed=violations == 0
        and abs(wrap_angle(vertex_angle - TWO_PI / n)) < 1e-6
        and all(abs(wrap_angle(h - math.pi / n)) < 1e-6 for h in half_angles),
        probes=probes.size,
        violations=violations,
        tolerance=tol,
        count_histogram=hist,
        vertex_angle=float(vertex_angle),
        half_sector_angles=(float(half_angles[0]), float(half_angles[1])),
        min_separation_scale=float(scale),
    )
    return copies, report


def _points_inside(polyline: np.ndarray, probes: np.ndarray, chunk: int = 2048) -> np.ndarray:
    """1 where the winding of the polyline around the probe is nonzero, else 0."""
    pts = _ensure_closed(polyline)
    out = np.zeros(probes.size, dtype=int)
    for i0 in range(0, probes.size, chunk):
        block = probes[i0 : i0 + chunk]
        rel = pts[None, :] - block[:, None]
        ang = np.angle(rel)
        diffs = np.diff(ang, axis=1)
        diffs = (diffs + math.pi) % TWO_PI - math.pi
        totals = np.abs(diffs.sum(axis=1) / TWO_PI)
        out[i0 : i0 + chunk] = (np.round(totals) != 0).astype(int)
    return out
