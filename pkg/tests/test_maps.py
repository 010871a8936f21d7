import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rosette import (
    MapValue,
    RosetteParams,
    SingularPoint,
    canonical_rotation,
    dg,
    dh,
    dilatation,
    endpoint_values,
    f,
    f_many,
    g,
    g_many,
    h,
    h_many,
    hypocycloid,
    jacobian,
    reduce_beta,
    scale_constant,
)

PI = math.pi


def disk_points(seed=0, count=50, r_max=0.95):
    rng = np.random.default_rng(seed)
    return r_max * np.sqrt(rng.uniform(0, 1, count)) * np.exp(
        1j * rng.uniform(0, 2 * PI, count)
    )


# --- parts --------------------------------------------------------------------


def test_h_at_origin_and_one():
    p = RosetteParams(6, 0.0)
    assert h(p, 0.0) == 0.0
    assert h(p, 1.0).real == pytest.approx(scale_constant(6), abs=1e-12)


def test_h_ray_collinearity():
    p = RosetteParams(5, 0.0)
    for j in (1, 2, 7):
        rot = cmath.exp(1j * j * PI / 5)
        for r in (0.3, 0.8, 0.99):
            assert h(p, r * rot) == pytest.approx(rot * h(p, r), abs=1e-12)
            assert cmath.phase(h(p, r * rot)) == pytest.approx(
                cmath.phase(rot), abs=1e-12
            )


def test_g_values():
    p = RosetteParams(6, 0.0)
    assert g(p, 0.0) == 0.0
    expect = math.tan(PI / 12) * scale_constant(6)
    assert g(p, 1.0).real == pytest.approx(expect, abs=1e-12)


def test_g_rotation_law():
    p = RosetteParams(4, 0.0)
    for j in (1, 2, 3):
        rot = cmath.exp(1j * j * PI / 4)
        z = 0.7 * cmath.exp(0.3j)
        expect = (-1) ** j / rot * g(p, z)
        assert g(p, rot * z) == pytest.approx(expect, abs=1e-12)


def test_f_structure_and_magnitude_at_one():
    for n, beta in ((6, 0.0), (5, 0.7), (3, PI / 2)):
        p = RosetteParams(n, beta)
        val = f(p, 0.0)
        assert isinstance(val, MapValue)
        assert val.f == val.h + val.gbar
        assert val.f == 0.0
        tn = math.tan(PI / (2 * n))
        expect = scale_constant(n) * math.sqrt(1 / math.cos(PI / (2 * n)) ** 2 + 2 * tn * math.cos(beta))
        assert abs(f(p, 1.0).f) == pytest.approx(expect, abs=1e-12)


def test_f_reflection_pairs_with_negated_phase():
    p_pos = RosetteParams(5, 0.6)
    p_neg = RosetteParams(5, -0.6)
    for z in disk_points(seed=2, count=10):
        assert f(p_pos, np.conj(z)).f == pytest.approx(
            complex(np.conj(f(p_neg, z).f)), abs=1e-12
        )


# --- derivatives ---------------------------------------------------------------


def test_derivatives_at_origin():
    p = RosetteParams(6, 0.0)
    assert dh(p, 0.0) == 1.0
    assert dg(p, 0.0) == 0.0


def test_dilatation_is_exact_power():
    z = 0.3 + 0.2j
    for n in (3, 5, 8):
        p = RosetteParams(n, 0.9)
        assert dg(p, z) / dh(p, z) == pytest.approx(z ** (n - 2), rel=1e-13)
        assert dilatation(p, z) == z ** (n - 2)
    assert dilatation(RosetteParams(3, 0.0), 0.0) == 0.0
    on_circle = cmath.exp(0.83j)
    assert abs(dilatation(RosetteParams(7, 0.0), on_circle)) == pytest.approx(1.0, abs=1e-15)
    assert abs(dilatation(RosetteParams(7, 0.0), 0.99 * on_circle)) < 1.0


def test_jacobian_values_and_positivity():
    p = RosetteParams(3, 0.0)
    assert jacobian(p, 0.0) == 1.0
    direct = abs(dh(p, 0.5)) ** 2 - abs(dg(p, 0.5)) ** 2
    assert jacobian(p, 0.5) == pytest.approx(direct, rel=1e-13)
    for z in disk_points(seed=3, count=200, r_max=0.999):
        assert jacobian(p, complex(z)) > 0.0


def test_jacobian_vanishes_toward_circle():
    p = RosetteParams(5, 0.0)
    ray = cmath.exp(1j * 0.4)  # not a 2n-th root of unity direction
    vals = [jacobian(p, r * ray) for r in (0.9, 0.99, 0.999, 0.9999)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1e-3


def test_singular_point_guard():
    p = RosetteParams(4, 0.0)
    with pytest.raises(SingularPoint):
        dh(p, 1.0)
    with pytest.raises(SingularPoint):
        jacobian(p, cmath.exp(1j * PI / 4))


# --- hypocycloid ----------------------------------------------------------------


def test_hypocycloid_values():
    assert hypocycloid(5, 0.0) == 0.0
    for n in (3, 5, 8):
        for k in range(n):
            z = cmath.exp(2j * PI * k / n)
            assert hypocycloid(n, z) == pytest.approx(n / (n - 1) * z, abs=1e-14)
    assert hypocycloid(4, 0.37).imag == 0.0


# --- phase algebra ----------------------------------------------------------------


def test_reduce_beta_examples():
    assert reduce_beta(PI / 2) == (PI / 2, 0)
    beta, l = reduce_beta(PI)
    assert beta == pytest.approx(0.0, abs=1e-15) and l == 1
    beta, l = reduce_beta(-3 * PI / 4)
    assert beta == pytest.approx(PI / 4, rel=1e-15) and l == -1
    beta, l = reduce_beta(-PI / 2)
    assert beta == pytest.approx(PI / 2, rel=1e-15) and l == -1


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=-50.0, max_value=50.0))
def test_reduce_beta_roundtrip(beta_tilde):
    beta, l = reduce_beta(beta_tilde)
    assert -PI / 2 < beta <= PI / 2 + 1e-15
    assert beta + l * PI == pytest.approx(beta_tilde, abs=1e-12)


def test_canonical_rotation_examples():
    assert canonical_rotation(0.0, 0.0) == (0.0, 0.0)
    gamma, beta = canonical_rotation(0.9, 0.9)
    assert gamma == 0.0 and beta == pytest.approx(1.8)  # full relative phase
    gamma, beta = canonical_rotation(PI / 3, -PI / 6)
    assert gamma == pytest.approx(PI / 4, rel=1e-15)
    assert beta == pytest.approx(PI / 6, rel=1e-15)


def test_canonical_rotation_identity_pointwise():
    theta, theta_t = 0.8, -0.3
    gamma, beta = canonical_rotation(theta, theta_t)
    p = RosetteParams(5, beta)
    flat = RosetteParams(5, 0.0)
    for z in disk_points(seed=4, count=8):
        z = complex(z)
        combo = cmath.exp(1j * theta) * h(flat, z) + (
            cmath.exp(1j * theta_t) * g(flat, z)
        ).conjugate()
        assert combo == pytest.approx(cmath.exp(1j * gamma) * f(p, z).f, abs=1e-12)


# --- global identities -------------------------------------------------------------


def test_rotational_symmetry_pointwise():
    p = RosetteParams(6, 0.3)
    z = disk_points(seed=5, count=40)
    for k in (1, 2, 5):
        rot = cmath.exp(2j * PI * k / 6)
        assert np.abs(f_many(p, rot * z) - rot * f_many(p, z)).max() < 1e-11


def test_half_turn_image_rotation():
    n = 4
    p = RosetteParams(n, 0.25)
    shifted = RosetteParams(n, 0.25 + PI)
    pre = cmath.exp(-1j * (PI / 2 + PI / n))
    z = disk_points(seed=6, count=40)
    lhs = f_many(p, z)
    rhs = pre * f_many(shifted, cmath.exp(1j * PI / n) * z)
    assert np.abs(lhs - rhs).max() < 1e-11


def test_beta_zero_real_axis_reflection():
    p = RosetteParams(5, 0.0)
    z = disk_points(seed=7, count=40)
    assert np.abs(f_many(p, np.conj(z)) - np.conj(f_many(p, z))).max() < 1e-12


def test_order_validation():
    with pytest.raises(ValueError):
        RosetteParams(2, 0.0)
    with pytest.raises(ValueError):
        hypocycloid(2, 0.5)


def test_vectorized_parts_match_scalars():
    p = RosetteParams(7, 1.1)
    z = disk_points(seed=8, count=12)
    hs = h_many(p, z)
    gs = g_many(p, z)
    for i, zi in enumerate(z):
        assert hs[i] == pytest.approx(h(p, complex(zi)), abs=1e-14)
        assert gs[i] == pytest.approx(g(p, complex(zi)), abs=1e-14)


def test_endpoint_helper_matches_parts():
    ev = endpoint_values(9)
    p = RosetteParams(9, 0.0)
    assert h(p, 1.0).real == pytest.approx(ev.analytic_at_one, abs=1e-12)
    assert g(p, 1.0).real == pytest.approx(ev.coanalytic_at_one / 8.0, abs=1e-12)


def test_maps_domain_guard():
    import pytest as _pytest
    from rosette import DomainError
    p = RosetteParams(5, 0.0)
    with _pytest.raises(DomainError):
        h(p, 1.5)
    # slack absorbs boundary-point rounding
    assert abs(h(p, 1.0 + 5e-10) - h(p, 1.0)) < 1e-12


def test_full_map_against_arbitrary_precision_twin():
    # independent reconstruction of f through mpmath's general 2F1
    import mpmath as mp

    def reference(n, beta, z):
        with mp.workdps(30):
            w = mp.mpmathify(z) ** (2 * n)
            hv = mp.mpmathify(z) * mp.hyp2f1(0.5, 1 / (2 * n), 1 + 1 / (2 * n), w)
            gv = mp.mpmathify(z) ** (n - 1) / (n - 1) * mp.hyp2f1(
                0.5, 0.5 - 1 / (2 * n), 1.5 - 1 / (2 * n), w
            )
            val = mp.exp(0.5j * beta) * hv + mp.exp(-0.5j * beta) * mp.conj(gv)
            return complex(val)

    rng = np.random.default_rng(17)
    for n, beta in ((3, 0.4), (6, -1.2), (5, PI / 2), (4, 2.9)):
        p = RosetteParams(n, beta)
        pts = list(0.98 * np.sqrt(rng.uniform(0, 1, 6)) * np.exp(1j * rng.uniform(0, 2 * PI, 6)))
        pts += [cmath.exp(1j * 0.71), cmath.exp(1j * (PI / n + 0.02)), 1.0 + 0.0j]
        for z in pts:
            got = f(p, complex(z)).f
            assert abs(got - reference(n, beta, complex(z))) < 5e-12
