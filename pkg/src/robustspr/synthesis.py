"""Construct ``c`` with ``c/a`` and ``c/b`` both strictly positive real.

Pipeline for degree ``n >= 2``:

1. find a monic degree ``n-1`` candidate whose numerators against ``a`` and
   ``b`` are both strictly positive on ``[0, inf)`` (cutting-plane LP);
2. shift its first coefficient down and last coefficient up by ``epsilon``;
3. add ``delta * h`` with ``h`` monic of degree ``n`` to restore equal degrees.

Every stage is verified by the Sturm-based checks, never assumed.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .config import DEFAULT, Tolerances
from .errors import IterationLimit, NoDeltaFound, NoEpsilonFound, SegmentUnstable
from .lp import LPUnbounded, simplex_max
from .polycore import Poly, _as_poly, isolate_min_on_halfline, one_plus_t_pow
from .sprcheck import (
    CandidatePoint,
    coefficient_map_affine,
    spr_margin,
    verify_positivity,
    verify_spr,
)
from .stability import _check_pair, segment_member, segment_stable


@dataclass(frozen=True)
class SynthesisResult:
    c_final: Poly
    x: CandidatePoint
    epsilon: float
    delta: float
    h: Poly
    margin_a: float
    margin_b: float
    iterations: int
    scale: float = 1.0

    def to_dict(self):
        return {
            "degree": self.c_final.degree,
            "c_final": self.c_final.to_list(),
            "x": list(self.x.x),
            "epsilon": self.epsilon,
            "delta": self.delta,
            "h": self.h.to_list(),
            "margin_a": self.margin_a,
            "margin_b": self.margin_b,
            "iterations": self.iterations,
            "frequency_scale": self.scale,
        }


def _require_monic(p, name):
    if abs(p.lead - 1.0) > 1e-12:
        raise ValueError(f"{name} must be monic (leading coefficient {p.lead!r})")


def _weighted_basis(u, n):
    """Row ``v`` with ``v @ c == g(t) / (1+t)^(n-1)`` where ``u = t/(1+t)``."""
    l = np.arange(1, n + 1)
    return u ** (n - l) * (1.0 - u) ** (l - 1)


def _u_of_t(t):
    return 1.0 if t == math.inf else t / (1.0 + t)


@dataclass
class FeasibilityProblem:
    """Cutting-plane state for ``max mu`` over candidates with both weighted numerators ``>= mu``.

    Numerator coefficients depend affinely on ``x``, so each sampled ``t``
    gives one linear inequality per endpoint. Cuts are kept in the
    compactified variable ``u = t/(1+t)``; ``u = 1`` is the limit at infinity.
    """

    a: Poly
    b: Poly
    x_max: float
    cuts: list = field(default_factory=list)

    def __post_init__(self):
        self.n = self.a.degree
        self._maps = {"a": coefficient_map_affine(self.a), "b": coefficient_map_affine(self.b)}
        self._seen = set()

    def add_cut(self, tag, t):
        u = _u_of_t(t)
        key = (tag, round(u, 15))
        if key in self._seen:
            return False
        self._seen.add(key)
        self.cuts.append((tag, t))
        return True

    def numerator(self, tag, x):
        c0, M = self._maps[tag]
        return Poly(c0 + M @ np.asarray(x))

    def solve(self):
        """LP relaxation over the current cuts. Returns ``(x, mu)``."""
        k = self.n - 1
        # columns for x are scaled by the box size so every variable lives in [0, 1]
        rows, rhs = [], []
        for tag, t in self.cuts:
            c0, M = self._maps[tag]
            v = _weighted_basis(_u_of_t(t), self.n)
            rows.append(np.r_[-(v @ M) * self.x_max, 1.0])
            rhs.append(v @ c0)
        rhs = np.asarray(rhs)
        shift = max(0.0, -rhs.min()) + 1.0  # mu = mu' - shift keeps the origin feasible
        A = np.asarray(rows)
        b = rhs + shift
        norms = np.max(np.abs(A), axis=1)
        A, b = A / norms[:, None], b / norms
        box = np.hstack([np.eye(k), np.zeros((k, 1))])
        A = np.vstack([A, box])
        b = np.r_[b, np.ones(k)]
        cost = np.r_[np.zeros(k), 1.0]
        y, _ = simplex_max(cost, A, b)
        return y[:k] * self.x_max, y[k] - shift


def _initial_cuts(prob, count):
    # Chebyshev-Lobatto nodes in u, both endpoints of [0, 1] included
    u = 0.5 * (1.0 - np.cos(np.pi * np.arange(count) / (count - 1)))
    for tag in ("a", "b"):
        for ui in u:
            prob.add_cut(tag, math.inf if ui >= 1.0 else float(ui / (1.0 - ui)))


def _search(a, b, tol):
    n = a.degree
    w = one_plus_t_pow(n - 1)
    x_max = 10.0 * max(n, a.scale(), b.scale())
    prob = FeasibilityProblem(a, b, x_max)
    _initial_cuts(prob, 4 * n + 1)
    best_x, best_m = None, -math.inf
    iters = 0
    for _ in range(tol.box_doublings + 1):
        while iters < tol.max_iters:
            iters += 1
            try:
                x, mu = prob.solve()
            except LPUnbounded:  # pragma: no cover - the t = inf cut bounds mu
                raise IterationLimit("LP relaxation unbounded", best_m, iters)
            mins = {tag: isolate_min_on_halfline(prob.numerator(tag, x), w, tol) for tag in ("a", "b")}
            m_true = min(v for _, v in mins.values())
            if m_true > best_m:
                best_x, best_m = x, m_true
            if mu < tol.eta:
                break  # even the relaxation cannot reach eta inside this box
            if best_m >= tol.eta and best_m >= 0.5 * mu:
                return CandidatePoint(tuple(best_x)), best_m, iters
            added = False
            for tag in ("a", "b"):
                t, v = mins[tag]
                if v < 0.5 * mu or v < tol.eta:
                    added |= prob.add_cut(tag, t)
            if not added:
                break
        if best_m >= tol.eta:
            return CandidatePoint(tuple(best_x)), best_m, iters
        if iters >= tol.max_iters:
            break
        prob.x_max *= 2.0
    raise IterationLimit(
        f"no candidate with margin >= {tol.eta} after {iters} LP solves", best_m, iters
    )


def find_common_point(a, b, tol: Tolerances = DEFAULT):
    """Candidate ``x`` whose numerators against ``a`` and ``b`` both have weighted margin ``>= eta``.

    Raises :class:`SegmentUnstable` if the segment is not Hurwitz stable, in
    which case no such point exists.
    """
    a, b = _check_pair(a, b)
    _require_monic(a, "a")
    _require_monic(b, "b")
    if a.degree < 2:
        raise ValueError("candidate search needs degree >= 2")
    verdict = segment_stable(a, b, tol)
    if not verdict.stable:
        raise SegmentUnstable("segment is not Hurwitz stable", verdict)
    x, _, _ = _search(a, b, tol)
    return x


def apply_epsilon(x, epsilon):
    """Candidate with ``x1 - epsilon`` and ``x_{n-1} + epsilon``; other entries verbatim."""
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    xs = list(x.x if isinstance(x, CandidatePoint) else np.atleast_1d(x))
    xs[0] -= epsilon
    xs[-1] += epsilon
    return Poly([1.0] + xs)


def select_epsilon(a, b, x, tol: Tolerances = DEFAULT):
    """Largest ``eta / 2^k`` keeping both numerators' margins at least ``eta / 2``."""
    eps = tol.eta
    floor = 0.5 * tol.eta
    for _ in range(tol.max_halvings):
        c = apply_epsilon(x, eps)
        ra = verify_positivity(c, a, tol)
        if ra.positive and ra.margin >= floor:
            rb = verify_positivity(c, b, tol)
            if rb.positive and rb.margin >= floor:
                return eps
        eps *= 0.5
    raise NoEpsilonFound("candidate is not interior to both positivity regions")


def lift_degree(c, a, b, h=None, tol: Tolerances = DEFAULT):
    """Return ``(c + delta*h, delta)`` making both ratios SPR.

    ``delta`` halves from 1 until both full checks pass; the returned value is
    half the first passing one (and itself re-verified).
    """
    c, a, b = _as_poly(c), _as_poly(a), _as_poly(b)
    h = segment_member(a, b, 0.5) if h is None else _as_poly(h)
    if h.degree != a.degree:
        raise ValueError("h must have the endpoints' degree")

    def ok(delta):
        ct = c + delta * h
        return ct if verify_spr(ct, a, tol).ok and verify_spr(ct, b, tol).ok else None

    delta = 1.0
    for _ in range(tol.max_halvings):
        if ok(delta) is not None:
            break
        delta *= 0.5
    else:
        raise NoDeltaFound("no delta makes both ratios SPR")
    for _ in range(tol.max_halvings):
        delta *= 0.5
        ct = ok(delta)
        if ct is not None:
            return ct, delta
    raise NoDeltaFound("safety-halved delta failed verification")


def rescale(p, sigma):
    """``p(sigma*s) / sigma^deg``: same leading coefficient, roots divided by ``sigma``."""
    p = _as_poly(p)
    return Poly([c / sigma**k for k, c in enumerate(p.coeffs)])


def _pipeline(a, b, tol, h):
    x, _, iters = _search(a, b, tol)
    eps = select_epsilon(a, b, x, tol)
    c_final, delta = lift_degree(apply_epsilon(x, eps), a, b, h, tol)
    h_used = segment_member(a, b, 0.5) if h is None else _as_poly(h)
    return c_final, x, eps, delta, h_used, iters


def synthesize(a, b, tol: Tolerances = DEFAULT, h=None):
    """``c`` of degree ``n`` with ``c/a`` and ``c/b`` both SPR.

    Raises :class:`SegmentUnstable` when the segment between ``a`` and ``b``
    contains a non-Hurwitz member; no such ``c`` can exist then.

    Margins are absolute in ``(1+t)^k`` weights, so endpoints whose roots are
    all far from unit modulus can starve the search. In that case the pair is
    rescaled to unit root scale ``sigma``, solved there and mapped back; the
    result records ``scale = sigma`` and satisfies
    ``c_final(s) = sigma^n * (apply_epsilon(x, epsilon) + delta*h)(s/sigma)``.
    Either way ``c_final`` is verified against the original endpoints.
    """
    a, b = _check_pair(a, b)
    _require_monic(a, "a")
    _require_monic(b, "b")
    verdict = segment_stable(a, b, tol)
    if not verdict.stable:
        raise SegmentUnstable("segment is not Hurwitz stable", verdict)
    n = a.degree

    def verified(c):
        return verify_spr(c, a, tol).ok and verify_spr(c, b, tol).ok

    if n == 1:
        c = Poly([1.0, 0.5 * min(a.coeffs[1], b.coeffs[1])])
        parts, sigma = (c, CandidatePoint(()), 0.0, 1.0, c - 1.0, 0), 1.0
    else:
        try:
            parts, sigma = _pipeline(a, b, tol, h), 1.0
        except (IterationLimit, NoEpsilonFound, NoDeltaFound) as exc:
            sigma = (a.coeffs[-1] * b.coeffs[-1]) ** (1.0 / (2 * n))
            if abs(math.log(sigma)) < 1e-12:
                raise
            hs = None if h is None else rescale(h, sigma)
            try:
                parts = _pipeline(rescale(a, sigma), rescale(b, sigma), tol, hs)
            except (IterationLimit, NoEpsilonFound, NoDeltaFound):
                raise exc
            c = rescale(parts[0], 1.0 / sigma)
            if not verified(c):
                raise exc
            parts = (c,) + parts[1:]
    c_final, x, eps, delta, h_used, iters = parts
    if not verified(c_final):
        raise RuntimeError("synthesized numerator failed final verification")  # pragma: no cover
    return SynthesisResult(
        c_final, x, eps, delta, h_used,
        spr_margin(c_final, a, tol), spr_margin(c_final, b, tol), iters, sigma,
    )


def verify_certificate(res, a, b, K=101, tol: Tolerances = DEFAULT):
    """SPR of ``c_final / ((1-lam) a + lam b)`` at ``K`` evenly spaced lambdas."""
    if K < 2:
        raise ValueError("K must be >= 2")
    c = res.c_final if isinstance(res, SynthesisResult) else _as_poly(res)
    return all(verify_spr(c, segment_member(a, b, lam), tol).ok for lam in np.linspace(0.0, 1.0, K))


def certificate_document(res, a, b, tol: Tolerances = DEFAULT):
    doc = res.to_dict()
    doc.update(
        a=_as_poly(a).to_list(),
        b=_as_poly(b).to_list(),
        tool_version=__version__,
        tolerances={"tau_pos": tol.tau_pos, "tau_root": tol.tau_root, "eta": tol.eta, "max_iters": tol.max_iters},
    )
    return doc
