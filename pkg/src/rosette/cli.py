"""Command-line interface: render figures, report features, verify, dump curves.

Subcommands
-----------
render     draw the image of a polar grid under one rosette map (SVG)
features   emit the cusp/node feature report (JSON or CSV)
verify     run the numerical certification suite; exit 1 on any failure
dump       stream boundary or radial curve samples as CSV
decompose  render with the fundamental-set overlay and report tiling coverage

``--beta`` accepts plain radians (``0.3``) or fractions of pi (``pi/4``,
``-2pi/5``, ``3pi``).  All output is deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from typing import Optional

import numpy as np

from .boundary import curve_samples, extract_features
from .maps import RosetteParams, f_many, reduce_beta
from .render import Overlay, RenderSpec, render_svg
from .series import SeriesKind
from .verify import (
    fundamental_decomposition,
    integral_oracle,
    symmetry_suite,
    univalence_scan,
)

SCHEMA_VERSION = 1

_BETA_RE = re.compile(
    r"^(?P<sign>[+-]?)(?P<mult>\d+(?:\.\d+)?)?\s*pi(?:\s*/\s*(?P<den>\d+(?:\.\d+)?))?$",
    re.IGNORECASE,
)


def parse_beta(text: str) -> float:
    """Radians from a decimal or a pi-fraction such as ``pi/4`` or ``-2pi/5``."""
    s = text.strip().replace(" ", "")
    m = _BETA_RE.match(s)
    if m:
        mult = float(m.group("mult")) if m.group("mult") else 1.0
        den = float(m.group("den")) if m.group("den") else 1.0
        val = mult * math.pi / den
        return -val if m.group("sign") == "-" else val
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse angle {text!r}: use radians or forms like pi/4, -2pi/5"
        ) from None


def _positive_order(text: str) -> int:
    n = int(text)
    if n < 3:
        raise argparse.ArgumentTypeError("the rosette order must satisfy n >= 3")
    return n


def _grid(text: str) -> tuple[int, int]:
    m = re.match(r"^(\d+)x(\d+)$", text.strip(), re.IGNORECASE)
    if not m:
        raise argparse.ArgumentTypeError("grid must look like 24x16")
    return int(m.group(1)), int(m.group(2))


def _overlays(text: str) -> frozenset:
    names = {
        "features": Overlay.FEATURES,
        "axes": Overlay.CUSP_AXES,
        "fundamental": Overlay.FUNDAMENTAL_SET,
        "hypocycloid": Overlay.HYPOCYCLOID,
    }
    out = set()
    for part in text.split(","):
        part = part.strip().lower()
        if not part:
            continue
        if part not in names:
            raise argparse.ArgumentTypeError(
                f"unknown overlay {part!r}; choose from {sorted(names)}"
            )
        out.add(names[part])
    return frozenset(out)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _num(x) -> str:
    """Shortest round-trip decimal form of a float, for CSV cells."""
    return repr(float(x))


# --- features ------------------------------------------------------------------


def _feature_payload(n: int, beta_input: float) -> dict:
    beta, shifts = reduce_beta(beta_input)
    params = RosetteParams(n, beta)
    report = extract_features(params)
    features = [
        {
            "kind": ft.kind.value,
            "t": ft.t,
            "re": ft.location.real,
            "im": ft.location.imag,
            "magnitude": ft.magnitude,
            "argument": ft.argument,
            "axis_arg": ft.axis_arg,
            "interior_angle": ft.interior_angle,
        }
        for ft in report.features
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "feature_report",
        "n": n,
        "beta_input": beta_input,
        "beta_canonical": beta,
        "half_turn_shifts": shifts,
        "features": features,
        "separations": list(report.separations),
        "total_curvature_per_petal": report.total_curvature_per_petal,
    }


def _features_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # RFC 4180 line endings
    writer.writerow(
        ["kind", "t", "re", "im", "magnitude", "argument", "axis_arg", "interior_angle"]
    )
    for ft in payload["features"]:
        writer.writerow(
            [
                ft["kind"],
                _num(ft["t"]),
                _num(ft["re"]),
                _num(ft["im"]),
                _num(ft["magnitude"]),
                _num(ft["argument"]),
                "" if ft["axis_arg"] is None else _num(ft["axis_arg"]),
                "" if ft["interior_angle"] is None else _num(ft["interior_angle"]),
            ]
        )
    return buf.getvalue()


def cmd_features(args) -> int:
    payload = _feature_payload(args.n, args.beta)
    if args.format == "json":
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        _write_text(args.out, _features_csv(payload))
    return 0


# --- verify ----------------------------------------------------------------------


def _checks_payload(report) -> list[dict]:
    return [
        {
            "name": c.name,
            "passed": bool(c.passed),
            "max_residual": float(c.max_residual),
            "samples_used": int(c.samples_used),
        }
        for c in report.checks
    ]


def cmd_verify(args) -> int:
    beta, shifts = reduce_beta(args.beta)
    params = RosetteParams(args.n, beta)
    quick = args.level == "quick"

    checks = []
    suite = symmetry_suite(params, sample_count=200 if quick else 1000, seed=args.seed)
    checks.extend(_checks_payload(suite))

    scan = univalence_scan(
        params,
        grid_resolution=12 if quick else 21,
        per_interval=None if not quick else 96,
        seed=args.seed,
    )
    checks.extend(_checks_payload(scan))

    rng = np.random.default_rng(args.seed)
    worst = 0.0
    count = 10 if quick else 50
    pts = 0.95 * np.sqrt(rng.uniform(0, 1, count)) * np.exp(
        1j * rng.uniform(0, 2 * math.pi, count)
    )
    for kind in (SeriesKind.ANALYTIC, SeriesKind.COANALYTIC):
        for z in pts:
            worst = max(worst, integral_oracle(params, complex(z), kind).residual)
        worst = max(worst, integral_oracle(params, 1.0, kind).residual)
    checks.append(
        {
            "name": "integral_identities",
            "passed": worst < 1e-9,
            "max_residual": worst,
            "samples_used": 2 * (count + 1),
        }
    )

    if not quick:
        original = RosetteParams(args.n, args.beta)
        _, coverage = fundamental_decomposition(original, probe_grid=60)
        checks.append(
            {
                "name": "fundamental_tiling",
                "passed": bool(coverage.passed),
                "max_residual": float(coverage.violations),
                "samples_used": coverage.probes,
            }
        )

    passed = all(c["passed"] for c in checks)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verification_report",
        "n": args.n,
        "beta_input": args.beta,
        "beta_canonical": beta,
        "half_turn_shifts": shifts,
        "level": args.level,
        "seed": args.seed,
        "passed": passed,
        "checks": checks,
    }
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["name", "passed", "max_residual", "samples_used"])
        for c in checks:
            writer.writerow(
                [c["name"], c["passed"], _num(c["max_residual"]), c["samples_used"]]
            )
        _write_text(args.out, buf.getvalue())
    else:
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    return 0 if passed else 1


# --- dump ------------------------------------------------------------------------


def cmd_dump(args) -> int:
    params = RosetteParams(args.n, args.beta)
    buf = io.StringIO()
    writer = csv.writer(buf)
    if args.what == "boundary":
        writer.writerow(["t", "re", "im", "d_arg", "d_mag"])
        ts = (np.arange(args.count) + 0.5) * 2.0 * math.pi / args.count
        for s in curve_samples(params, ts):
            writer.writerow(
                [
                    _num(s.t),
                    _num(s.value.real),
                    _num(s.value.imag),
                    "" if s.d_arg is None else _num(s.d_arg),
                    _num(s.d_mag),
                ]
            )
    else:
        writer.writerow(["ray_arg", "r", "re", "im"])
        rs = (np.arange(args.count) + 0.5) / args.count
        for ray_arg in (0.0, math.pi / args.n, 2.0 * math.pi / args.n):
            vals = f_many(params, rs * np.exp(1j * ray_arg))
            for r, v in zip(rs, vals):
                writer.writerow([_num(ray_arg), _num(r), _num(v.real), _num(v.imag)])
    _write_text(args.out, buf.getvalue())
    return 0


# --- render / decompose -----------------------------------------------------------


def _render_spec(args, extra_overlays: frozenset = frozenset()) -> RenderSpec:
    radial, circles = args.grid
    return RenderSpec(
        params=RosetteParams(args.n, args.beta),
        radial_lines=radial,
        circles=circles,
        samples_per_curve=args.samples,
        width_px=args.width,
        margin_frac=args.margin,
        overlay=frozenset(args.overlay | extra_overlays),
    )


def cmd_render(args) -> int:
    spec = _render_spec(args)
    doc = render_svg(spec)
    if args.out is None:
        raise SystemExit("render requires --out PATH")
    _write_text(args.out, doc)
    return 0


def cmd_decompose(args) -> int:
    spec = _render_spec(args, extra_overlays=frozenset({Overlay.FUNDAMENTAL_SET}))
    doc = render_svg(spec)
    if args.out is not None:
        _write_text(args.out, doc)
    params = RosetteParams(args.n, args.beta)
    _, coverage = fundamental_decomposition(params, probe_grid=args.probe_grid)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "coverage_report",
        "n": args.n,
        "beta": args.beta,
        "passed": bool(coverage.passed),
        "probes": coverage.probes,
        "violations": coverage.violations,
        "tolerance": coverage.tolerance,
        "count_histogram": {str(k): v for k, v in coverage.count_histogram.items()},
        "vertex_angle": coverage.vertex_angle,
        "half_sector_angles": list(coverage.half_sector_angles),
    }
    _write_text(args.report, json.dumps(payload, indent=2) + "\n")
    return 0 if coverage.passed else 1


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rosette",
        description="Rosette harmonic mappings: figures, features, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=_positive_order, required=True, help="order, n >= 3")
        p.add_argument(
            "--beta",
            type=parse_beta,
            required=True,
            help="phase in radians or as a pi fraction (pi/4, -2pi/5)",
        )

    p = sub.add_parser("features", help="cusp/node feature report")
    common(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("verify", help="numerical certification suite")
    common(p)
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump", help="CSV stream of curve samples")
    common(p)
    p.add_argument("--what", choices=["boundary", "radial"], default="boundary")
    p.add_argument("--count", type=int, default=64)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dump)

    for name, fn in (("render", cmd_render), ("decompose", cmd_decompose)):
        p = sub.add_parser(name, help=f"{name} a figure")
        common(p)
        p.add_argument("--out", default=None, help="output SVG path")
        p.add_argument("--grid", type=_grid, default=(24, 16), help="RxC polar grid")
        p.add_argument("--samples", type=int, default=256)
        p.add_argument("--width", type=int, default=900)
        p.add_argument("--margin", type=float, default=0.08)
        p.add_argument(
            "--overlay",
            type=_overlays,
            default=frozenset(),
            help="comma list: features,axes,fundamental,hypocycloid",
        )
        if name == "decompose":
            p.add_argument("--report", default=None, help="coverage report path (JSON)")
            p.add_argument("--probe-grid", type=int, default=60)
        p.set_defaults(func=fn)

    return parser


def _merge_negative_angles(argv: list[str]) -> list[str]:
    """Join ``--beta -pi/3`` into ``--beta=-pi/3`` so argparse accepts it."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--beta" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--beta={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_negative_angles(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
