import argparse
import csv
import io
import json
import math
import xml.etree.ElementTree as ET

import pytest

from rosette.cli import main, parse_beta

PI = math.pi


def run_cli(args):
    return main(args)


# --- angle parsing ---------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expect",
    [
        ("0.3", 0.3),
        ("1.9", 1.9),
        ("-0.25", -0.25),
        ("pi", PI),
        ("pi/4", PI / 4),
        ("-2pi/5", -2 * PI / 5),
        ("3pi/7", 3 * PI / 7),
        ("2pi", 2 * PI),
        ("PI/2", PI / 2),
        ("+pi/3", PI / 3),
    ],
)
def test_parse_beta(text, expect):
    assert parse_beta(text) == pytest.approx(expect, rel=1e-15)


@pytest.mark.parametrize("bad", ["pie", "pi/", "2x", "", "pi/4/2"])
def test_parse_beta_rejects(bad):
    with pytest.raises(argparse.ArgumentTypeError):
        parse_beta(bad)


def test_rejects_small_order(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(["features", "--n", "2", "--beta", "0"])
    assert exc.value.code == 2
    assert "n >= 3" in capsys.readouterr().err


# --- features ----------------------------------------------------------------------


def test_features_json_structure(tmp_path):
    out = tmp_path / "features.json"
    assert run_cli(["features", "--n", "5", "--beta", "pi/4", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["schema_version"] == 1
    assert payload["n"] == 5
    assert payload["half_turn_shifts"] == 0
    assert len(payload["features"]) == 10
    kinds = [ft["kind"] for ft in payload["features"]]
    assert kinds[0::2] == ["cusp"] * 5
    assert kinds[1::2] == ["removable_node"] * 5
    expect = PI / 5 + math.atan(math.sqrt(5 / 2 - math.sqrt(5)))
    assert payload["separations"][0] == pytest.approx(expect, abs=1e-12)


def test_features_reports_phase_reduction(tmp_path):
    out = tmp_path / "f.json"
    run_cli(["features", "--n", "4", "--beta", "1.9", "--out", str(out)])
    payload = json.loads(out.read_text())
    assert payload["half_turn_shifts"] == 1
    assert payload["beta_canonical"] == pytest.approx(1.9 - PI)


def test_features_half_pi_nodes(tmp_path):
    out = tmp_path / "nodes.json"
    run_cli(["features", "--n", "5", "--beta", "pi/2", "--out", str(out)])
    payload = json.loads(out.read_text())
    assert len(payload["features"]) == 5
    for ft in payload["features"]:
        assert ft["kind"] == "node"
        assert ft["interior_angle"] == pytest.approx(3 * PI / 10)


def test_features_csv_rfc4180(tmp_path):
    out = tmp_path / "features.csv"
    run_cli(["features", "--n", "6", "--beta", "0", "--format", "csv", "--out", str(out)])
    raw = out.read_bytes()
    assert b"\r\n" in raw
    rows = list(csv.reader(io.StringIO(raw.decode("utf-8"))))
    assert rows[0] == [
        "kind",
        "t",
        "re",
        "im",
        "magnitude",
        "argument",
        "axis_arg",
        "interior_angle",
    ]
    assert len(rows) == 13  # header + 12 features
    spacing = [float(r[1]) for r in rows[1:]]
    assert spacing == pytest.approx([j * PI / 6 for j in range(12)])


# --- verify -------------------------------------------------------------------------


def test_verify_quick_passes(tmp_path):
    out = tmp_path / "verify.json"
    code = run_cli(
        [
            "verify",
            "--n",
            "6",
            "--beta",
            "0.3",
            "--level",
            "quick",
            "--seed",
            "7",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
    names = [c["name"] for c in payload["checks"]]
    assert "rotational_symmetry" in names
    assert "boundary_simple" in names
    assert "integral_identities" in names
    assert "fundamental_tiling" not in names  # full level only


def test_verify_full_includes_tiling(tmp_path):
    out = tmp_path / "verify_full.json"
    code = run_cli(
        [
            "verify",
            "--n",
            "3",
            "--beta",
            "pi/2",
            "--level",
            "full",
            "--seed",
            "1",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
    assert any(c["name"] == "fundamental_tiling" for c in payload["checks"])


# --- dump ----------------------------------------------------------------------------


def test_dump_boundary(tmp_path):
    out = tmp_path / "boundary.csv"
    run_cli(
        ["dump", "--n", "6", "--beta", "0", "--what", "boundary", "--count", "64", "--out", str(out)]
    )
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == ["t", "re", "im", "d_arg", "d_mag"]
    assert len(rows) == 65
    for r in rows[1:]:
        t = float(r[0])
        d_mag = float(r[4])
        expect = math.sqrt(2.0) / abs((1.0 - complex(math.cos(12 * t), math.sin(12 * t))) ** 0.5)
        assert d_mag == pytest.approx(expect, rel=1e-10)


def test_dump_radial_straight_ray(tmp_path):
    out = tmp_path / "radial.csv"
    run_cli(
        ["dump", "--n", "6", "--beta", "0", "--what", "radial", "--count", "12", "--out", str(out)]
    )
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == ["ray_arg", "r", "re", "im"]
    first_ray = [r for r in rows[1:] if float(r[0]) == 0.0]
    assert len(first_ray) == 12
    for r in first_ray:
        assert abs(float(r[3])) < 1e-13  # argument identically zero on the ray


def test_dump_radial_magnitude_increases_at_half_pi(tmp_path):
    out = tmp_path / "radial2.csv"
    run_cli(
        ["dump", "--n", "5", "--beta", "pi/2", "--what", "radial", "--count", "24", "--out", str(out)]
    )
    rows = list(csv.reader(io.StringIO(out.read_text())))[1:]
    mags = [math.hypot(float(r[2]), float(r[3])) for r in rows if float(r[0]) == 0.0]
    assert all(b > a for a, b in zip(mags, mags[1:]))


# --- render / decompose ----------------------------------------------------------------


def test_render_deterministic_and_valid(tmp_path):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    args = ["render", "--n", "5", "--beta", "pi/3", "--samples", "64", "--grid", "12x8"]
    assert run_cli(args + ["--out", str(a)]) == 0
    assert run_cli(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    root = ET.fromstring(a.read_text())
    assert root.tag.endswith("svg")
    assert len(list(root)) > 20


def test_render_with_overlays(tmp_path):
    out = tmp_path / "overlay.svg"
    code = run_cli(
        [
            "render",
            "--n",
            "6",
            "--beta",
            "0",
            "--samples",
            "64",
            "--grid",
            "8x4",
            "--overlay",
            "features,axes,hypocycloid",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    text = out.read_text()
    assert "<circle" in text  # feature dots present


def test_decompose(tmp_path):
    svg = tmp_path / "dec.svg"
    rep = tmp_path / "dec.json"
    code = run_cli(
        [
            "decompose",
            "--n",
            "5",
            "--beta",
            "pi/5",
            "--samples",
            "64",
            "--grid",
            "8x4",
            "--probe-grid",
            "25",
            "--out",
            str(svg),
            "--report",
            str(rep),
        ]
    )
    assert code == 0
    payload = json.loads(rep.read_text())
    assert payload["passed"] is True
    assert payload["violations"] == 0
    assert payload["vertex_angle"] == pytest.approx(2 * PI / 5, abs=1e-9)


def test_negative_beta_value_on_command_line(tmp_path):
    out = tmp_path / "neg.json"
    assert run_cli(["features", "--n", "5", "--beta", "-pi/3", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["beta_input"] == pytest.approx(-PI / 3)
