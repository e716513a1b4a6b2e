"""Strict positive realness checks and the candidate-to-numerator coefficient map.

For ``f = c/d`` the real part on the imaginary axis is
``Re f(jw) = N(w^2) / |d(jw)|^2`` with ``N = R_c R_d + t I_c I_d``, so the
frequency-domain half of SPR is strict positivity of ``N`` on ``[0, inf)``.

An SPR report numbers its conditions: 1 equal degrees, 2 Hurwitz
denominator, 3 positive real part on the imaginary axis.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import DimensionMismatch, NotApplicable
from .polycore import (
    Poly,
    _as_poly,
    even_odd_split,
    isolate_min_on_halfline,
    one_plus_t_pow,
    real_roots,
    sturm_count,
)
from .stability import hurwitz_test


@dataclass(frozen=True)
class CandidatePoint:
    """Coefficients below the leading 1 of ``s^(n-1) + x1 s^(n-2) + ... + x_{n-1}``."""

    x: tuple

    def __post_init__(self):
        x = tuple(float(v) for v in np.atleast_1d(np.asarray(self.x, dtype=float)))
        if not all(math.isfinite(v) for v in x):
            raise ValueError("candidate entries must be finite")
        object.__setattr__(self, "x", x)

    @property
    def n(self):
        return len(self.x) + 1

    @property
    def poly(self):
        return Poly((1.0,) + self.x)

    def __len__(self):
        return len(self.x)


@dataclass(frozen=True)
class PositivityReport:
    positive: bool
    margin: float
    t_witness: Optional[float] = None

    def __bool__(self):
        return self.positive


@dataclass(frozen=True)
class SPRReport:
    """Outcome of the full SPR check; ``failed_condition`` is 1, 2 or 3 when ``ok`` is False."""

    ok: bool
    failed_condition: Optional[int] = None
    positivity: Optional[PositivityReport] = None

    def __bool__(self):
        return self.ok


def _as_candidate(x):
    return x if isinstance(x, CandidatePoint) else CandidatePoint(tuple(np.atleast_1d(x)))


def coefficient_map_affine(a):
    """``(c0, M)`` with ``coefficient_map(a, x) == c0 + M @ x`` for every ``x``.

    Each ``c_l`` is a signed sum of products ``a_j * x_{2l-j-1}``; index 0 of
    ``x`` is the constant 1 and out-of-range indices vanish.
    """
    a = _as_poly(a)
    n = a.degree
    av = a.arr / a.lead
    c0 = np.zeros(n)
    M = np.zeros((n, n - 1))
    for l in range(1, n + 1):
        for j in range(0, n + 1):
            idx = 2 * l - j - 1
            sgn = -1.0 if (l + j) % 2 else 1.0
            if idx == 0:
                c0[l - 1] += sgn * av[j]
            elif 1 <= idx <= n - 1:
                M[l - 1, idx - 1] += sgn * av[j]
    return c0, M


def coefficient_map(a, x):
    """Numerator coefficients ``(c_1, ..., c_n)`` of ``Re[cand(jw) conj(a(jw))]`` in ``t = w^2``.

    ``sum_l c_l t^(n-l) = R_cand R_a + t I_cand I_a`` where ``cand`` is the
    monic degree ``n-1`` candidate built from ``x``.
    """
    a = _as_poly(a)
    x = _as_candidate(x)
    if a.degree != x.n:
        raise DimensionMismatch(f"deg(a)={a.degree} but candidate has n={x.n}")
    c0, M = coefficient_map_affine(a)
    return c0 + M @ np.asarray(x.x)


def spr_numerator(p, q):
    """``N`` with ``N(w^2) = Re[p(jw) * conj(q(jw))]``."""
    ep, eq = even_odd_split(p), even_odd_split(q)
    return ep.R * eq.R + Poly([1.0, 0.0]) * (ep.I * eq.I)


def positivity_on_halfline(g, tol: Tolerances = DEFAULT):
    """Certify ``g(t) > 0`` on ``[0, inf)``.

    The margin is ``min g(t)/(1+t)^deg(g)``, which also encodes the limit at
    infinity (the leading coefficient). Positive means the margin clears
    ``tau_pos`` and a Sturm count finds no root in ``(0, inf)``.
    """
    g = _as_poly(g)
    tau = tol.tau_pos
    if g.is_zero():
        return PositivityReport(False, 0.0, 0.0)
    if g.degree == 0:
        ok = g.lead > tau
        return PositivityReport(ok, g.lead, None if ok else 0.0)
    w = one_plus_t_pow(g.degree)
    t_star, margin = isolate_min_on_halfline(g, w, tol)
    roots_inside = sturm_count(g, 0.0, math.inf, tol)
    ok = g(0.0) > tau and g.lead > tau and roots_inside == 0 and margin > tau
    if ok:
        return PositivityReport(True, margin, t_star)
    if margin > tau and roots_inside:
        # Sturm sees a root the minimizer stepped over; report it
        for t in real_roots(g, 0.0, math.inf, tol):
            v = float(g(t) / w(t))
            if v < margin:
                t_star, margin = t, v
    return PositivityReport(False, margin, t_star)


def verify_positivity(c, d, tol: Tolerances = DEFAULT):
    """Condition 3 alone: ``Re[c(jw)/d(jw)] > 0`` for all real ``w``."""
    return positivity_on_halfline(spr_numerator(c, d), tol)


def _stable_denominator(d, tol):
    if d.degree < 1:
        return d.lead != 0.0
    return hurwitz_test(d, tol)


def verify_spr(c, d, tol: Tolerances = DEFAULT):
    """Full SPR check of ``c/d``: equal degrees, Hurwitz ``d``, positive real part."""
    c, d = _as_poly(c), _as_poly(d)
    if c.is_zero() or c.degree != d.degree:
        return SPRReport(False, 1)
    if not _stable_denominator(d, tol):
        return SPRReport(False, 2)
    rep = verify_positivity(c, d, tol)
    return SPRReport(rep.positive, None if rep.positive else 3, rep)


def spr_margin(c, d, tol: Tolerances = DEFAULT):
    """``min over t >= 0 of N(t)/(1+t)^n`` for an equal-degree ratio with Hurwitz ``d``."""
    c, d = _as_poly(c), _as_poly(d)
    if c.is_zero() or c.degree != d.degree:
        raise NotApplicable("degrees differ")
    if not _stable_denominator(d, tol):
        raise NotApplicable("denominator is not Hurwitz")
    N = spr_numerator(c, d)
    if N.is_zero():
        return 0.0
    _, v = isolate_min_on_halfline(N, one_plus_t_pow(max(d.degree, N.degree)), tol)
    return v
