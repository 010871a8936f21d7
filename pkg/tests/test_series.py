import math
from math import comb

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rosette import (
    DomainError,
    NoConvergence,
    SeriesKind,
    SeriesSpec,
    TruncationPolicy,
    central_binomials,
    coeff,
    coeff_triple,
    endpoint_values,
    eval_series,
    eval_series_many,
    tail_bound,
)

A = SeriesKind.ANALYTIC
C = SeriesKind.COANALYTIC


def spec(kind, n, **kw):
    if kw:
        return SeriesSpec(kind, n, TruncationPolicy(**kw))
    return SeriesSpec(kind, n)


def mp_reference(kind, n, z):
    """Independent oracle: mpmath's general hypergeometric evaluator."""
    with mp.workdps(30):
        if kind is A:
            val = mp.hyp2f1(0.5, 1.0 / (2 * n), 1.0 + 1.0 / (2 * n), mp.mpmathify(z))
        else:
            val = mp.hyp2f1(
                0.5, 0.5 - 1.0 / (2 * n), 1.5 - 1.0 / (2 * n), mp.mpmathify(z)
            )
        return complex(val)


# --- coefficients -------------------------------------------------------------


def test_binomial_factor_recurrence_matches_closed_form():
    a = central_binomials(25)
    for m in range(25):
        assert a[m] == pytest.approx(comb(2 * m, m) / 4.0**m, rel=1e-15)


def test_coefficient_examples():
    assert coeff(spec(A, 7), 0) == 1.0
    assert coeff(spec(A, 6), 1) == pytest.approx(1.0 / 26.0, rel=1e-15)
    assert coeff(spec(C, 6), 1) == pytest.approx(5.0 / 34.0, rel=1e-15)


def test_equality_case_n3():
    # c_1 + d_2 = d_1 holds exactly at n = 3
    c1 = coeff(spec(A, 3), 1)
    d1 = coeff(spec(C, 3), 1)
    d2 = coeff(spec(C, 3), 2)
    assert c1 + d2 == pytest.approx(d1, rel=1e-15)


def test_coefficients_positive_and_dominated():
    for n in (3, 5, 10):
        for m in (0, 1, 2, 7, 100, 5000):
            ca = coeff(spec(A, n), m)
            cc = coeff(spec(C, n), m)
            assert ca > 0 and cc > 0
            if m >= 1:
                assert cc > ca  # strict domination for n > 2


def test_coefficients_coincide_at_n2():
    for m in range(40):
        assert coeff(spec(A, 2), m) == pytest.approx(coeff(spec(C, 2), m), rel=1e-15)


def test_coeff_triple_fields():
    t = coeff_triple(spec(A, 6), 3)
    assert t.m == 3
    assert t.central_binomial == pytest.approx(comb(6, 3) / 64.0, rel=1e-15)
    assert t.value == pytest.approx(t.central_binomial / 37.0, rel=1e-15)


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        SeriesSpec(A, 1)
    with pytest.raises(ValueError):
        TruncationPolicy(abs_tol=0.0)
    with pytest.raises(ValueError):
        TruncationPolicy(max_terms=0)
    with pytest.raises(ValueError):
        coeff(spec(A, 4), -1)


# --- tail bound ----------------------------------------------------------------


def test_tail_bound_dominates_true_tail():
    # the geometric truncation bound must dominate the measured partial tails
    rng = np.random.default_rng(5)
    for kind in (A, C):
        for n in (3, 6, 11):
            s = spec(kind, n)
            for absz in (0.3, 0.8, 0.95, 0.995):
                for m_stop in (10, 200, 3000):
                    ms = np.arange(m_stop + 1, m_stop + 1001)
                    cofs = np.array([coeff(s, int(m)) for m in ms])
                    true_tail = float(np.sum(cofs * absz**ms))
                    assert tail_bound(s, m_stop, absz) >= true_tail
    _ = rng


def test_tail_bound_infinite_on_circle():
    assert math.isinf(tail_bound(spec(A, 5), 100, 1.0))


# --- evaluation ----------------------------------------------------------------


def test_value_at_zero_is_one():
    assert eval_series(spec(A, 6), 0.0) == 1.0 + 0.0j
    assert eval_series(spec(C, 4), 0.0) == 1.0 + 0.0j


def test_endpoint_matches_gamma_closed_form():
    for n in range(3, 13):
        ev = endpoint_values(n)
        got_a = eval_series(spec(A, n), 1.0)
        got_c = eval_series(spec(C, n), 1.0)
        assert got_a.real == pytest.approx(ev.analytic_at_one, abs=5e-13)
        assert got_c.real == pytest.approx(ev.coanalytic_at_one, abs=5e-13)
        assert abs(got_a.imag) < 1e-15 and abs(got_c.imag) < 1e-15


def test_value_at_minus_one_bounds():
    got = eval_series(spec(C, 5), -1.0).real
    upper = eval_series(spec(A, 5), -1.0).real
    assert 5.0 / 6.0 < got < upper < 1.0


def test_bounds_chain():
    for n in (3, 7, 20):
        g_minus = eval_series(spec(C, n), -1.0).real
        h_minus = eval_series(spec(A, n), -1.0).real
        h_plus = eval_series(spec(A, n), 1.0).real
        g_plus = eval_series(spec(C, n), 1.0).real
        assert 5.0 / 6.0 < g_minus < h_minus < 1.0 < h_plus < g_plus < 2.0


def test_ratio_identity():
    for n in (3, 6, 12):
        ra = eval_series(spec(C, n), 1.0).real / eval_series(spec(A, n), 1.0).real
        assert ra == pytest.approx((n - 1) * math.tan(math.pi / (2 * n)), rel=1e-12)


def test_endpoint_values_pair_consistent():
    for n in range(2, 30):
        ev = endpoint_values(n)
        expect = (n - 1) * math.tan(math.pi / (2 * n)) * ev.analytic_at_one
        # 4 units of combined evaluation error at ~1e-15 each
        assert abs(ev.coanalytic_at_one - expect) <= 4e-15 * expect


@settings(max_examples=120, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=0.999),
    st.floats(min_value=-math.pi, max_value=math.pi),
    st.sampled_from([3, 4, 6, 9]),
)
def test_reflection_symmetry(r, th, n):
    z = r * complex(math.cos(th), math.sin(th))
    for kind in (A, C):
        s = spec(kind, n)
        assert eval_series(s, z.conjugate()) == pytest.approx(
            eval_series(s, z).conjugate(), abs=1e-12
        )


def test_real_monotonicity():
    xs = np.linspace(0.0, 1.0, 64)
    for kind in (A, C):
        vals = eval_series_many(spec(kind, 5), xs).real
        assert (np.diff(vals) > 0).all()


def test_half_plane_image():
    rng = np.random.default_rng(11)
    z = 0.999 * np.sqrt(rng.uniform(0, 1, 200)) * np.exp(
        1j * rng.uniform(0, 2 * math.pi, 200)
    )
    for kind in (A, C):
        s = spec(kind, 4)
        lo = eval_series(s, -1.0).real
        hi = eval_series(s, 1.0).real
        vals = eval_series_many(s, z)
        assert (vals.real > lo).all() and (vals.real < hi).all()


def test_matches_arbitrary_precision_oracle():
    rng = np.random.default_rng(3)
    pts = [
        1.0,
        -1.0,
        0.5,
        -0.97,
        complex(np.exp(1j * 2.0)),
        complex(np.exp(1j * 0.02)),
        complex(np.exp(-1j * 0.004)),
        0.9995 * complex(np.exp(1j * 0.6)),
        complex(np.exp(1j * (math.pi - 0.01))),
    ]
    pts += list(0.99 * np.sqrt(rng.uniform(0, 1, 8)) * np.exp(1j * rng.uniform(0, 2 * math.pi, 8)))
    for n in (3, 6, 12):
        for kind in (A, C):
            s = spec(kind, n)
            for z in pts:
                got = eval_series(s, z)
                ref = mp_reference(kind, n, z)
                assert abs(got - ref) < 1e-12, (kind, n, z)


def test_extreme_sliver_falls_back_to_arbitrary_precision():
    z = complex(np.exp(1j * 3e-7))  # (M+1)*|1-z| stays below the expansion threshold
    got = eval_series(spec(A, 5), z)
    assert abs(got - mp_reference(A, 5, z)) < 1e-12


def test_vector_scalar_consistency():
    rng = np.random.default_rng(1)
    z = np.concatenate(
        [
            0.9 * np.sqrt(rng.uniform(0, 1, 16)) * np.exp(1j * rng.uniform(0, 2 * math.pi, 16)),
            np.exp(1j * rng.uniform(0.01, 2 * math.pi - 0.01, 8)),
            np.array([1.0 + 0.0j]),
        ]
    )
    s = spec(C, 7)
    batch = eval_series_many(s, z)
    singles = np.array([eval_series(s, za) for za in z])
    assert np.abs(batch - singles).max() < 1e-13


def test_domain_error_outside_disk():
    with pytest.raises(DomainError):
        eval_series(spec(A, 5), 1.2)


def test_boundary_rounding_slack_accepted():
    val = eval_series(spec(A, 5), 1.0 + 1e-9)
    assert abs(val - eval_series(spec(A, 5), 1.0)) < 1e-3  # projected onto the circle


def test_no_convergence_when_capped():
    tight = spec(A, 5, abs_tol=1e-12, max_terms=200)
    with pytest.raises(NoConvergence):
        eval_series(tight, 0.99999)
    absurd = spec(A, 5, abs_tol=1e-19)
    with pytest.raises(NoConvergence):
        eval_series(absurd, 1.0)


def test_tail_telescoping_consistency():
    # the boundary-regime value must not depend on where the tail takes over
    for kind in (A, C):
        s_lo = SeriesSpec(kind, 4, TruncationPolicy(max_terms=1500))
        s_hi = SeriesSpec(kind, 4, TruncationPolicy(max_terms=2_000_000))
        for z in (1.0, -1.0, complex(np.exp(1j * 0.37))):
            assert abs(eval_series(s_lo, z) - eval_series(s_hi, z)) < 5e-13
