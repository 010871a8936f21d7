import math

import pytest
from hypothesis import given, settings, strategies as st

from rosette import DomainError, gamma_real


def test_classical_values():
    assert gamma_real(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma_real(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma_real(1.5) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-14)
    assert gamma_real(5.0) == pytest.approx(24.0, rel=1e-14)


def test_matches_stdlib_on_working_range():
    # the endpoint formulas only use [0.5, 3]; demand 1e-13 relative there
    for i in range(2501):
        x = 0.5 + 2.5 * i / 2500
        assert abs(gamma_real(x) / math.gamma(x) - 1.0) < 1e-13


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=0.05, max_value=30.0))
def test_matches_stdlib_broadly(x):
    assert abs(gamma_real(x) / math.gamma(x) - 1.0) < 5e-13


def test_recurrence_property():
    for x in (0.5, 0.75, 1.25, 2.0):
        assert gamma_real(x + 1.0) == pytest.approx(x * gamma_real(x), rel=1e-13)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, float("nan"), float("inf")])
def test_rejects_nonpositive(bad):
    with pytest.raises(DomainError):
        gamma_real(bad)
