"""The two specialized Gauss hypergeometric series underlying the rosette maps.

For an integer order n >= 2 the package needs the hypergeometric functions

    2F1(1/2, 1/(2n);     1 + 1/(2n);     w)   -- ``SeriesKind.ANALYTIC``
    2F1(1/2, 1/2-1/(2n); 3/2 - 1/(2n);   w)   -- ``SeriesKind.COANALYTIC``

on the closed unit disk.  Their Taylor coefficients are

    analytic:    A_m / (2mn + 1)
    coanalytic:  A_m (n-1) / (n(2m+1) - 1)

where A_0 = 1 and A_m = A_{m-1}(2m-1)/(2m) is the normalized central
binomial coefficient binom(2m, m)/4^m.  Both series have positive,
decreasing coefficients of size O(m^{-3/2}), so they converge absolutely on
|w| <= 1 but only at rate O(M^{-1/2}) on the circle itself.  The evaluator
therefore works in two regimes:

* away from |w| = 1 a direct compensated sum with a rigorous geometric tail
  bound (the coefficients decrease, so the tail after M terms is at most
  coeff(M+1) |w|^{M+1} / (1 - |w|));
* near and on the circle a direct sum of the first M ~ 2e4..2e6 terms plus
  an analytic tail correction.  Writing coeff(m) = kappa * A_m/(m + s) and
  expanding A_m = (pi m)^{-1/2} (1 - 1/(8m) + ...), the tail becomes a short
  combination of sums  sum_{m>M} m^{-(3/2+p)} w^m  that ``_tails`` evaluates
  by Euler-Maclaurin (w = 1), a Lerch-type large-index expansion (w bounded
  away from 1), or arbitrary precision (the remaining sliver).

The achieved absolute accuracy is ~1e-13 everywhere on the closed disk; the
evaluator raises ``NoConvergence`` whenever its own error estimate exceeds
the policy tolerance instead of returning a silently degraded value.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np

from . import _tails
from .errors import DomainError, NoConvergence
from .gammafn import gamma_real

# Slack on |w| <= 1 absorbing rounding of boundary points exp(i t).
DOMAIN_SLACK = 1e-7

# Terms of the direct sum in the boundary regime before the tail correction.
_BOUNDARY_MIN_TERMS = 20_000
_HARD_TERM_CAP = 2_000_000
_K_REQ = 30.0  # target size of (M+1)*|1-w| for the Lerch tail

_BLOCK = 512

# Asymptotic expansion of the normalized central binomial coefficient:
# A_m * sqrt(pi m) = 1 - 1/(8m) + 1/(128 m^2) + 5/(1024 m^3) - 21/(32768 m^4) + ...
_CENTRAL_BINOM_ASYM = (1.0, -1.0 / 8.0, 1.0 / 128.0, 5.0 / 1024.0, -21.0 / 32768.0)
_TAIL_DEPTH = len(_CENTRAL_BINOM_ASYM) - 1


class SeriesKind(Enum):
    """Which of the two hypergeometric families to evaluate."""

    ANALYTIC = "analytic"      # factor multiplying z in the analytic part
    COANALYTIC = "coanalytic"  # factor multiplying z^(n-1)/(n-1) in the co-analytic part


@dataclass(frozen=True)
class TruncationPolicy:
    """Absolute-tolerance truncation control for the series evaluator."""

    abs_tol: float = 1e-12
    max_terms: int = 2_000_000

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SeriesSpec:
    """One hypergeometric family: kind, order n and truncation policy."""

    kind: SeriesKind
    n: int
    policy: TruncationPolicy = field(default=DEFAULT_POLICY)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"series order must satisfy n >= 2, got {self.n}")
        if not isinstance(self.kind, SeriesKind):
            raise TypeError("kind must be a SeriesKind")


class CoeffTriple(NamedTuple):
    m: int
    central_binomial: float  # A_m
    value: float             # the Taylor coefficient itself


class EndpointValues(NamedTuple):
    """Values of the two families at argument 1, from the gamma closed forms."""

    analytic_at_one: float    # the scale constant of the order-n rosette
    coanalytic_at_one: float


# --- coefficient cache -------------------------------------------------------

_A_LOCK = threading.Lock()
_A_CACHE = np.array([1.0])  # A_0 .. A_{len-1}; replaced wholesale on growth


def central_binomials(count: int) -> np.ndarray:
    """A_0 .. A_{count-1} by the stable multiplicative recurrence (read-only view)."""
    global _A_CACHE
    buf = _A_CACHE
    if buf.size < count:
        with _A_LOCK:
            buf = _A_CACHE
            if buf.size < count:
                newsize = max(count, 2 * buf.size)
                grown = np.empty(newsize)
                grown[: buf.size] = buf
                m = np.arange(buf.size, newsize, dtype=float)
                grown[buf.size :] = buf[-1] * np.cumprod((2.0 * m - 1.0) / (2.0 * m))
                _A_CACHE = grown
                buf = grown
    view = buf[:count]
    view.flags.writeable = False
    return view


def _kappa_s(kind: SeriesKind, n: int) -> tuple[float, float]:
    """(kappa, s) with coeff(m) = kappa * A_m / (m + s)."""
    if kind is SeriesKind.ANALYTIC:
        return 1.0 / (2.0 * n), 1.0 / (2.0 * n)
    return (n - 1.0) / (2.0 * n), (n - 1.0) / (2.0 * n)


def coeff_values(spec: SeriesSpec, count: int) -> np.ndarray:
    """The first ``count`` Taylor coefficients of the family."""
    a = central_binomials(count)
    m = np.arange(count, dtype=float)
    if spec.kind is SeriesKind.ANALYTIC:
        return a / (2.0 * m * spec.n + 1.0)
    return a * (spec.n - 1.0) / (spec.n * (2.0 * m + 1.0) - 1.0)


def coeff(spec: SeriesSpec, m: int) -> float:
    """Taylor coefficient of index m (m >= 0)."""
    if m < 0:
        raise ValueError("coefficient index must be non-negative")
    a = central_binomials(m + 1)[m]
    if spec.kind is SeriesKind.ANALYTIC:
        return a / (2.0 * m * spec.n + 1.0)
    return a * (spec.n - 1.0) / (spec.n * (2.0 * m + 1.0) - 1.0)


def coeff_triple(spec: SeriesSpec, m: int) -> CoeffTriple:
    return CoeffTriple(m, central_binomials(m + 1)[m], coeff(spec, m))


def tail_bound(spec: SeriesSpec, m: int, abs_z: float) -> float:
    """Rigorous bound on |sum_{k>m} coeff(k) z^k| for |z| = abs_z < 1.

    Valid because the coefficients are positive and decreasing.  Returns
    inf for abs_z >= 1 where no geometric bound exists.
    """
    if abs_z >= 1.0:
        return math.inf
    return coeff(spec, m + 1) * abs_z ** (m + 1) / (1.0 - abs_z)


# --- evaluation --------------------------------------------------------------


def _partial_sums(cofs: np.ndarray, w: np.ndarray, m_last: int) -> np.ndarray:
    """sum_{m=0}^{m_last} cofs[m] w^m for each w, blocked GEMM + Kahan recombination."""
    nterms = m_last + 1
    nblocks = -(-nterms // _BLOCK)
    # chunk the points so the (Q, nblocks) intermediate stays modest
    max_q = max(1, int(4_000_000 // max(nblocks, _BLOCK)))
    if w.size > max_q:
        out = np.empty(w.size, dtype=complex)
        for i in range(0, w.size, max_q):
            out[i : i + max_q] = _partial_sums(cofs, w[i : i + max_q], m_last)
        return out

    q = w.size
    powers = np.empty((q, _BLOCK), dtype=complex)
    powers[:, 0] = 1.0
    if _BLOCK > 1:
        np.cumprod(np.repeat(w[:, None], _BLOCK - 1, axis=1), axis=1, out=powers[:, 1:])
    padded = np.zeros(nblocks * _BLOCK)
    padded[:nterms] = cofs[:nterms]
    cmat = padded.reshape(nblocks, _BLOCK).T
    block_sums = powers.real @ cmat + 1j * (powers.imag @ cmat)  # (q, nblocks)

    w_block = powers[:, -1] * w  # w^_BLOCK
    factors = np.empty((q, nblocks), dtype=complex)
    factors[:, 0] = 1.0
    if nblocks > 1:
        np.cumprod(np.repeat(w_block[:, None], nblocks - 1, axis=1), axis=1, out=factors[:, 1:])
    terms = block_sums * factors

    acc = np.zeros(q, dtype=complex)
    comp = np.zeros(q, dtype=complex)
    for b in range(nblocks):  # Kahan over block subtotals
        y = terms[:, b] - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return acc


def _asym_v(s: float) -> np.ndarray:
    """Coefficients v_p of coeff(m) ~ kappa/sqrt(pi) sum_p v_p m^{-3/2-p}."""
    u = _CENTRAL_BINOM_ASYM
    return np.array(
        [sum(u[k] * (-s) ** (p - k) for k in range(p + 1)) for p in range(_TAIL_DEPTH + 1)]
    )


def _tail_corrections(
    spec: SeriesSpec, a: int, w: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Analytic tail sum_{m>=a} coeff(m) w^m for each w, with error estimates."""
    kappa, s = _kappa_s(spec.kind, spec.n)
    v = _asym_v(s)
    scale = kappa / math.sqrt(math.pi)
    tails = np.zeros(w.size, dtype=complex)
    errs = np.zeros(w.size)

    at_one = w == 1.0
    if at_one.any():
        total = sum(v[p] * _tails.zeta_tail(1.5 + p, a) for p in range(v.size))
        tails[at_one] = scale * total
        errs[at_one] = 1e-18

    rest = ~at_one
    if rest.any():
        dist = np.abs(1.0 - w[rest])
        use_lerch = (a * dist) >= _tails.LERCH_THRESHOLD
        idx_rest = np.flatnonzero(rest)
        if use_lerch.any():
            sel = idx_rest[use_lerch]
            wl = w[sel]
            tot = np.zeros(wl.size, dtype=complex)
            err = np.zeros(wl.size)
            for p in range(v.size):
                val, e = _tails.lerch_tail_vec(1.5 + p, a, wl)
                tot += v[p] * val
                err += abs(v[p]) * e
            tails[sel] = scale * tot
            errs[sel] = scale * err
        if (~use_lerch).any():
            for j in idx_rest[~use_lerch]:
                wj = complex(w[j])
                tot = sum(
                    v[p] * _tails.lerch_tail_mp(1.5 + p, a, wj) for p in range(v.size)
                )
                tails[j] = scale * tot
                errs[j] = 1e-16

    # truncation of the coefficient asymptotics itself
    errs += 4.0 * scale * _tails.zeta_tail(1.5 + _TAIL_DEPTH + 1, a)
    return tails, errs


def eval_series_many(spec: SeriesSpec, z) -> np.ndarray:
    """Evaluate the series at every point of ``z`` (any array-like of complex).

    Result error is at most policy.abs_tol in absolute value everywhere on
    the closed unit disk; NoConvergence is raised if that cannot be certified.
    """
    w = np.asarray(z, dtype=complex)
    shape = w.shape
    w = np.array(w.ravel(), copy=True)
    aw = np.abs(w)
    if (aw > 1.0 + DOMAIN_SLACK).any():
        worst = w[np.argmax(aw)]
        raise DomainError(f"series argument {worst} lies outside the closed unit disk")
    over = aw > 1.0
    if over.any():
        w[over] /= aw[over]
        aw[over] = 1.0

    pol = spec.policy
    tol = pol.abs_tol
    direct_cap = min(_BOUNDARY_MIN_TERMS, pol.max_terms)

    with np.errstate(divide="ignore", invalid="ignore"):
        m_geo = np.ceil(np.log(tol * (1.0 - aw)) / np.log(aw))
    m_geo = np.where(aw == 0.0, 1.0, m_geo)
    m_geo = np.clip(m_geo, 1.0, np.inf)
    inside = aw < 1.0
    direct = inside & (m_geo <= direct_cap)

    m_req = np.empty(w.size, dtype=np.int64)
    m_req[direct] = m_geo[direct].astype(np.int64)
    boundary = ~direct
    if boundary.any():
        dist = np.abs(1.0 - w[boundary])
        with np.errstate(divide="ignore"):
            want = np.where(dist > 0.0, np.ceil(_K_REQ / dist), _BOUNDARY_MIN_TERMS)
        want = np.maximum(want, _BOUNDARY_MIN_TERMS)
        want = np.minimum(want, min(pol.max_terms, _HARD_TERM_CAP))
        m_req[boundary] = want.astype(np.int64)
        if (m_req[boundary] < _tails.A_MIN).any():
            raise NoConvergence(
                "max_terms is too small to certify the tolerance near |z| = 1"
            )

    # bucket required term counts to powers of two to limit distinct sum lengths
    buckets = np.maximum(m_req, 64)
    buckets = (2 ** np.ceil(np.log2(buckets))).astype(np.int64)
    buckets = np.minimum(buckets, min(pol.max_terms, _HARD_TERM_CAP))
    buckets = np.maximum(buckets, m_req)  # never shrink below what is needed

    out = np.empty(w.size, dtype=complex)
    err = np.zeros(w.size)
    for m_last in np.unique(buckets):
        sel = buckets == m_last
        cofs = coeff_values(spec, int(m_last) + 1)
        out[sel] = _partial_sums(cofs, w[sel], int(m_last))
        sel_boundary = sel & boundary
        if sel_boundary.any():
            t, e = _tail_corrections(spec, int(m_last) + 1, w[sel_boundary])
            out[sel_boundary] += t
            err[sel_boundary] += e
        sel_direct = sel & direct
        if sel_direct.any():
            err[sel_direct] += (
                cofs[-1] * aw[sel_direct] ** float(m_last) / (1.0 - aw[sel_direct])
            )

    if (err > tol).any():
        worst = float(err.max())
        raise NoConvergence(
            f"series tail error estimate {worst:.3e} exceeds abs_tol {tol:.3e}"
        )
    return out.reshape(shape)


def eval_series(spec: SeriesSpec, z: complex) -> complex:
    """Evaluate the series at one point of the closed unit disk."""
    return complex(eval_series_many(spec, np.array([z]))[0])


def endpoint_values(n: int) -> EndpointValues:
    """Values of both families at argument 1 via the gamma closed forms.

    analytic_at_one   = sqrt(pi) Gamma(1 + 1/(2n)) / Gamma(1/2 + 1/(2n))
    coanalytic_at_one = sqrt(pi) Gamma(3/2 - 1/(2n)) / Gamma(1 - 1/(2n))

    and the pair satisfies coanalytic/analytic = (n-1) tan(pi/(2n)).
    """
    if n < 2:
        raise ValueError(f"order must satisfy n >= 2, got {n}")
    x = 1.0 / (2.0 * n)
    root_pi = math.sqrt(math.pi)
    analytic = root_pi * gamma_real(1.0 + x) / gamma_real(0.5 + x)
    coanalytic = root_pi * gamma_real(1.5 - x) / gamma_real(1.0 - x)
    return EndpointValues(analytic, coanalytic)


def scale_constant(n: int) -> float:
    """The analytic family's value at 1; sets the overall size of the rosette."""
    return endpoint_values(n).analytic_at_one
