"""Hurwitz stability of a polynomial and of the segment (1-lam)*a + lam*b."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import DegreeMismatch
from .polycore import Poly, _as_poly, even_odd_split, real_roots

# Relative residual allowed when checking that a crossing frequency solves
# both the real and imaginary equations for the same lambda.
_CROSSING_CONSISTENCY = 1e-6


@dataclass(frozen=True)
class SegmentVerdict:
    stable: bool
    witness_lambda: Optional[float] = None
    witness_omega: Optional[float] = None
    endpoint_reports: tuple = (True, True)

    def swapped(self):
        """The verdict for the reversed segment (b, a)."""
        lam = None if self.witness_lambda is None else 1.0 - self.witness_lambda
        return SegmentVerdict(self.stable, lam, self.witness_omega, self.endpoint_reports[::-1])


def routh_first_column_ok(coeffs, tau_pos=DEFAULT.tau_pos):
    """Row-wise Routh test on a ``(K, n+1)`` coefficient matrix (highest first).

    Returns a boolean array: True where every first-column entry exceeds
    ``tau_pos``. Rows with a negative leading coefficient are negated first.
    No epsilon substitution: a vanishing pivot means not Hurwitz.
    """
    C = np.atleast_2d(np.asarray(coeffs, dtype=float))
    C = C * np.where(C[:, :1] < 0, -1.0, 1.0)
    K, m = C.shape
    n = m - 1
    ok = C[:, 0] > tau_pos
    if n == 0:
        return ok
    width = (m + 1) // 2
    r0 = np.zeros((K, width))
    r1 = np.zeros((K, width))
    r0[:, : len(range(0, m, 2))] = C[:, 0::2]
    r1[:, : len(range(1, m, 2))] = C[:, 1::2]
    for _ in range(n):
        pivot = r1[:, 0]
        ok &= pivot > tau_pos
        safe = np.where(ok, pivot, 1.0)
        new = np.zeros_like(r0)
        new[:, :-1] = (safe[:, None] * r0[:, 1:] - r0[:, :1] * r1[:, 1:]) / safe[:, None]
        r0, r1 = r1, new
    return ok


def hurwitz_test(p, tol: Tolerances = DEFAULT):
    """True iff every root of ``p`` lies in the open left half-plane."""
    p = _as_poly(p)
    if p.degree < 1:
        raise ValueError("hurwitz_test needs degree >= 1")
    return bool(routh_first_column_ok(p.arr[None, :], tol.tau_pos)[0])


def segment_crossing_function(a, b):
    """``W(t) = A_R(t) B_I(t) - A_I(t) B_R(t)``.

    Some member of the segment has a root at ``jw`` (``w != 0``) only if
    ``W(w^2) = 0``, because the two real equations for lambda must be
    simultaneously solvable.
    """
    ea, eb = even_odd_split(a), even_odd_split(b)
    return ea.R * eb.I - ea.I * eb.R


def _check_pair(a, b):
    a, b = _as_poly(a), _as_poly(b)
    if a.degree != b.degree:
        raise DegreeMismatch(f"deg(a)={a.degree} != deg(b)={b.degree}")
    if a.degree < 1:
        raise ValueError("segment endpoints need degree >= 1")
    return a, b


def segment_stable(a, b, tol: Tolerances = DEFAULT):
    """Decide Hurwitz stability of every ``(1-lam)*a + lam*b``, ``lam`` in [0, 1].

    Uses the zero-exclusion argument: with stable endpoints, a member loses
    stability only by passing a root through the imaginary axis. Candidate
    crossing frequencies are the positive real roots of the crossing function;
    for each one the crossing lambda is recovered and checked against [0, 1].
    Crossings at the boundary of [0, 1] (within ``tau_pos``) count as unstable.
    """
    a, b = _check_pair(a, b)
    ha, hb = hurwitz_test(a, tol), hurwitz_test(b, tol)
    if not (ha and hb):
        lam = 0.0 if not ha else 1.0
        return SegmentVerdict(False, lam, None, (ha, hb))
    # w = 0 never crosses: for Hurwitz endpoints the constant term has the sign
    # of the leading one, so any convex mix of monic endpoints keeps it nonzero.
    assert a.coeffs[-1] * a.lead > 0 and b.coeffs[-1] * b.lead > 0

    W = segment_crossing_function(a, b)
    if W.scale() <= 1e-13 * a.scale() * b.scale():
        # a(jw) and b(jw) parallel for every w: the ratio stays real and positive.
        return SegmentVerdict(True, None, None, (True, True))

    ea, eb = even_odd_split(a), even_odd_split(b)
    for t in real_roots(W, 0.0, math.inf, tol):
        if t <= 0:
            continue
        lam = _crossing_lambda(ea, eb, t)
        if lam is None:
            continue
        if -tol.tau_pos <= lam <= 1.0 + tol.tau_pos:
            lam = min(max(lam, 0.0), 1.0)
            return SegmentVerdict(False, lam, math.sqrt(t), (True, True))
    return SegmentVerdict(True, None, None, (True, True))


def _crossing_lambda(ea, eb, t):
    ar, ai = float(ea.R(t)), float(ea.I(t))
    br, bi = float(eb.R(t)), float(eb.I(t))
    den_r, den_i = ar - br, ai - bi
    if abs(den_r) >= abs(den_i):
        if den_r == 0.0:
            return None
        lam = ar / den_r
    else:
        lam = ai / den_i
    res_r = (1 - lam) * ar + lam * br
    res_i = (1 - lam) * ai + lam * bi
    scale = max(abs(ar), abs(br), abs(ai), abs(bi))
    if max(abs(res_r), abs(res_i)) > _CROSSING_CONSISTENCY * scale:
        return None
    return lam


def segment_grid_oracle(a, b, K, tol: Tolerances = DEFAULT):
    """Routh test at ``K`` evenly spaced lambdas. False is a counterexample; True is not a proof."""
    if K < 2:
        raise ValueError("K must be >= 2")
    a, b = _check_pair(a, b)
    lam = np.linspace(0.0, 1.0, K)[:, None]
    C = (1.0 - lam) * a.arr[None, :] + lam * b.arr[None, :]
    return bool(np.all(routh_first_column_ok(C, tol.tau_pos)))


def segment_member(a, b, lam):
    return Poly((1.0 - lam) * _as_poly(a).arr + lam * _as_poly(b).arr)
