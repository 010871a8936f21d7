"""Figure rendering: images of a polar grid under a rosette map, with overlays.

The viewport is the square of side 2 * bounding_radius(n) * (1 + margin_frac)
centered at the origin, identical for every beta at fixed n, so figures for
different beta are directly size-comparable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .boundary import extract_features, boundary_points, bounding_radius
from .maps import RosetteParams, f_many, hypocycloid, reduce_beta
from .svgout import SvgCanvas, axis_segment, flatten_curve
from .verify import rotated_copies, _segment_distances

TWO_PI = 2.0 * math.pi


class Overlay(Enum):
    FEATURES = "features"
    CUSP_AXES = "axes"
    FUNDAMENTAL_SET = "fundamental"
    HYPOCYCLOID = "hypocycloid"


@dataclass(frozen=True)
class RenderSpec:
    params: RosetteParams
    radial_lines: int = 24
    circles: int = 16
    samples_per_curve: int = 256
    width_px: int = 900
    margin_frac: float = 0.08
    overlay: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.radial_lines < 1 or self.circles < 1:
            raise ValueError("grid must have at least one radial line and one circle")
        if self.samples_per_curve < 16:
            raise ValueError("samples_per_curve must be at least 16")


def _rotated_features(params: RosetteParams):
    """Features of f for any beta: canonical features carried through the shift law."""
    beta_c, shifts = reduce_beta(params.beta)
    canonical = RosetteParams(params.n, beta_c, params.policy)
    report = extract_features(canonical, confirm=False)
    if shifts == 0:
        return report.features
    pre = cmath.exp(1j * shifts * (math.pi / params.n + math.pi / 2))
    rotated = []
    for ft in report.features:
        rotated.append(
            replace(
                ft,
                t=ft.t + shifts * math.pi / params.n,
                location=pre * ft.location,
                argument=(ft.argument + cmath.phase(pre)) % TWO_PI,
                axis_arg=None if ft.axis_arg is None else ft.axis_arg + cmath.phase(pre),
            )
        )
    return tuple(rotated)


def _boundary_vertices(spec: RenderSpec) -> np.ndarray:
    """Boundary polyline with the exact feature points as vertices."""
    params = spec.params
    n = params.n
    per = max(spec.samples_per_curve, 64)
    mids = []
    for j in range(2 * n):
        mids.append((j + (np.arange(per) + 0.5) / per) * math.pi / n)
    ts = np.concatenate(mids)
    vals = boundary_points(params, ts)
    feats = _rotated_features(params)
    ft_ts = np.array([ft.t % TWO_PI for ft in feats])
    ft_vals = np.array([ft.location for ft in feats])
    allts = np.concatenate([ts, ft_ts])
    allvals = np.concatenate([vals, ft_vals])
    order = np.argsort(allts)
    out = allvals[order]
    return np.append(out, out[0])


def _radial_curve(spec: RenderSpec, theta: float, tol_world: float) -> np.ndarray:
    params = spec.params
    ray = cmath.exp(1j * theta)
    inner = flatten_curve(
        lambda rs: f_many(params, rs * ray),
        0.0,
        1.0 - 1e-4,
        max(spec.samples_per_curve // 4, 16),
        tol_world,
    )
    endpoint = boundary_points(params, np.array([theta]))  # exact boundary value
    return np.append(inner, endpoint)


def render_svg(spec: RenderSpec) -> str:
    """Build the SVG document for one rosette figure."""
    params = spec.params
    n = params.n
    half = bounding_radius(n) * (1.0 + spec.margin_frac)
    canvas = SvgCanvas(width_px=spec.width_px, world_half=half)
    tol_world = 0.1 * (2.0 * half / spec.width_px)

    # images of the interior circles of the polar grid
    for i in range(1, spec.circles):
        rho = i / spec.circles
        curve = flatten_curve(
            lambda ts, r=rho: f_many(params, r * np.exp(1j * ts)),
            0.0,
            TWO_PI,
            spec.samples_per_curve,
            tol_world,
        )
        canvas.polyline(curve, stroke="#9db7d2", width=0.8)

    # images of the radial lines
    for j in range(spec.radial_lines):
        theta = TWO_PI * j / spec.radial_lines
        canvas.polyline(_radial_curve(spec, theta, tol_world), stroke="#9db7d2", width=0.8)

    if Overlay.HYPOCYCLOID in spec.overlay:
        curve = flatten_curve(
            lambda ts: hypocycloid(n, np.exp(1j * ts)),
            0.0,
            TWO_PI,
            spec.samples_per_curve,
            tol_world,
        )
        canvas.polyline(curve, stroke="#c08030", width=1.0)

    if Overlay.FUNDAMENTAL_SET in spec.overlay:
        copies, _, _ = rotated_copies(params)
        for copy in copies[:-1]:
            canvas.polyline(copy.polyline, stroke="#bbbbbb", width=0.6)
        canvas.polyline(copies[-1].polyline, stroke="#207020", width=1.6)

    # boundary curve, bold, passing exactly through the features
    boundary = _boundary_vertices(spec)
    canvas.polyline(boundary, stroke="#123a66", width=1.6)

    feats = _rotated_features(params)
    if Overlay.CUSP_AXES in spec.overlay:
        for ft in feats:
            if ft.axis_arg is not None and ft.kind.value == "cusp":
                a, b = axis_segment(ft.location, ft.axis_arg, 0.22 * half)
                canvas.line(a, b, stroke="#aa3333", width=0.7)
    if Overlay.FEATURES in spec.overlay:
        for ft in feats:
            color = "#aa3333" if ft.kind.value == "cusp" else "#333333"
            canvas.dot(ft.location, radius_px=3.0, fill=color)

    return canvas.document()


def render(spec: RenderSpec, out_path: str) -> None:
    """Write the figure to ``out_path``; byte output is deterministic."""
    doc = render_svg(spec)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(doc)


def feature_overlay_deviation_px(spec: RenderSpec) -> float:
    """Largest pixel distance from any feature dot to the rendered boundary."""
    half = bounding_radius(spec.params.n) * (1.0 + spec.margin_frac)
    scale = spec.width_px / (2.0 * half)
    boundary = _boundary_vertices(spec) * scale
    worst = 0.0
    for ft in _rotated_features(spec.params):
        d = float(_segment_distances(boundary, complex(ft.location) * scale).min())
        worst = max(worst, d)
    return worst
