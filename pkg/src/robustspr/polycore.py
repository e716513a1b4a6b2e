"""Real polynomials, imaginary-axis decomposition, Sturm root counting.

Coefficients are stored highest degree first, so ``Poly([1, 3, 3, 1])`` is
``s^3 + 3s^2 + 3s + 1``. The same class carries polynomials in ``s`` and in
``t = w^2``; the variable name only matters for printing.
"""

import math
import warnings
from typing import NamedTuple

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import DegreeDrop, Unbounded, ZeroPolynomial


class Poly:
    """Immutable real polynomial with highest-degree-first coefficients.

    Leading exact zeros are stripped on construction. The zero polynomial has
    no coefficients and ``degree == -1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            c = coeffs._c
        elif isinstance(coeffs, (list, tuple)):
            c = [float(v) for v in coeffs]
            if not all(math.isfinite(v) for v in c):
                raise ValueError("coefficients must be finite")
            k = 0
            while k < len(c) and c[k] == 0.0:
                k += 1
            c = tuple(c[k:])
        else:
            arr = np.atleast_1d(np.asarray(coeffs, dtype=float))
            if arr.ndim != 1:
                raise ValueError("coefficients must be a flat sequence")
            if not np.all(np.isfinite(arr)):
                raise ValueError("coefficients must be finite")
            nz = np.flatnonzero(arr)
            arr = arr[nz[0]:] if nz.size else arr[:0]
            c = tuple(float(v) for v in arr)
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def from_roots(cls, roots, lead=1.0):
        c = np.real_if_close(np.poly(np.asarray(roots)), tol=1e6)
        if np.iscomplexobj(c):
            raise ValueError("roots must come in conjugate pairs")
        return cls(lead * np.asarray(c, dtype=float))

    @classmethod
    def monomial(cls, k, coef=1.0):
        return cls([coef] + [0.0] * k)

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    @property
    def lead(self):
        return self._c[0] if self._c else 0.0

    @property
    def arr(self):
        return np.array(self._c, dtype=float)

    def is_zero(self):
        return not self._c

    def scale(self):
        """Largest coefficient magnitude (0 for the zero polynomial)."""
        return max((abs(v) for v in self._c), default=0.0)

    def __call__(self, x):
        if not self._c:
            return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
        return np.polyval(self._c, x)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Poly({list(self._c)!r})"

    def __neg__(self):
        return Poly([-v for v in self._c])

    def __add__(self, other):
        other = _as_poly(other)
        return Poly(np.polyadd(self.arr, other.arr)) if self._c or other._c else Poly()

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self._c or not other._c:
                return Poly()
            return Poly(np.convolve(self.arr, other.arr))
        return Poly(self.arr * float(other))

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Poly(self.arr / float(k))

    def __pow__(self, k):
        out = Poly([1.0])
        for _ in range(int(k)):
            out = out * self
        return out

    def deriv(self):
        d = self.degree
        if d <= 0:
            return Poly()
        return Poly([v * (d - i) for i, v in enumerate(self._c[:-1])])

    def divmod(self, other):
        q, r = polydiv(self.arr, _as_poly(other).arr)
        return Poly(q), Poly(r)

    def trim(self, rel=0.0):
        """Drop leading coefficients whose magnitude is at most ``rel * scale()``."""
        return Poly(_trim(self.arr, rel))

    def to_list(self):
        return list(self._c)


def _as_poly(p):
    if isinstance(p, Poly):
        return p
    if np.ndim(p) == 0:
        return Poly([float(p)])
    return Poly(p)


def _trim(arr, rel):
    if arr.size == 0:
        return arr
    cut = rel * float(np.max(np.abs(arr)))
    k = 0
    while k < arr.size and abs(arr[k]) <= cut:
        k += 1
    return arr[k:]


def polydiv(num, den):
    """Long division of coefficient arrays (highest first). No leading-zero trimming."""
    num = np.asarray(num, dtype=float)
    den = np.asarray(den, dtype=float)
    if den.size == 0 or den[0] == 0.0:
        raise ZeroDivisionError("division by polynomial with zero leading coefficient")
    if num.size < den.size:
        return np.zeros(0), num.copy()
    r = num.copy()
    q = np.zeros(num.size - den.size + 1)
    for i in range(q.size):
        q[i] = r[i] / den[0]
        r[i:i + den.size] -= q[i] * den
    return q, r[q.size:]


def one_plus_t_pow(m):
    """(1 + t)^m as a Poly."""
    return Poly([math.comb(m, k) for k in range(m + 1)])


# --------------------------------------------------------------------------
# normalization and decomposition


def normalize_monic(p):
    """Scale ``p`` to be monic. Returns ``(monic, negated)``.

    ``negated`` is True when the leading coefficient was negative; callers
    that care about sign conventions (SPR ratios) must flip their partner too.
    """
    p = _as_poly(p)
    if p.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    lead = p.lead
    return Poly(p.arr / lead), lead < 0


class EvenOddParts(NamedTuple):
    """``p(jw) = R(w^2) + j*w*I(w^2)``."""

    R: Poly
    I: Poly


def even_odd_split(p):
    p = _as_poly(p)
    if p.is_zero():
        return EvenOddParts(Poly(), Poly())
    asc = p.arr[::-1]
    even = asc[0::2].copy()
    odd = asc[1::2].copy()
    even[1::2] *= -1.0
    odd[1::2] *= -1.0
    return EvenOddParts(Poly(even[::-1]), Poly(odd[::-1]))


# --------------------------------------------------------------------------
# gcd, square-free part, Sturm chains
#
# These run on plain float lists: the degrees involved are small and the
# per-call overhead of numpy dominates otherwise.


def _horner(c, x):
    v = 0.0
    for a in c:
        v = v * x + a
    return v


def _ltrim(c, rel):
    if not c:
        return c
    cut = rel * max(abs(v) for v in c)
    k = 0
    while k < len(c) and abs(c[k]) <= cut:
        k += 1
    return c[k:]


def _lunit(c):
    m = max((abs(v) for v in c), default=0.0)
    return [v / m for v in c] if m > 0 else list(c)


def _ldiv(num, den):
    """Long division on lists; remainder has ``len(den) - 1`` entries."""
    r = list(num)
    nd = len(den)
    if len(r) < nd:
        return [], r
    d0 = den[0]
    q = []
    for i in range(len(r) - nd + 1):
        f = r[i] / d0
        q.append(f)
        if f:
            for k in range(1, nd):
                r[i + k] -= f * den[k]
    return q, r[len(r) - nd + 1:]


def _lderiv(c):
    d = len(c) - 1
    return [v * (d - i) for i, v in enumerate(c[:-1])]


def _lgcd(a, b, cutoff):
    a, b = _lunit(a), _lunit(b)
    if not a:
        return [v / b[0] for v in b] if b else []
    if not b:
        return [v / a[0] for v in a]
    if len(a) < len(b):
        a, b = b, a
    while True:
        _, r = _ldiv(a, b)
        if not r or max(abs(v) for v in r) <= cutoff:
            return [v / b[0] for v in b]
        r = _ltrim(_lunit(r), cutoff)
        a, b = b, r


def poly_gcd(p, q, cutoff=DEFAULT.gcd_cutoff):
    """Approximate monic gcd by Euclid with a relative remainder cutoff."""
    return Poly(_lgcd(list(_as_poly(p).coeffs), list(_as_poly(q).coeffs), cutoff))


def _lsquare_free(c, cutoff):
    if len(c) <= 2:
        out = _lunit(c)
    else:
        g = _lgcd(c, _lderiv(c), cutoff)
        out = _lunit(_ldiv(c, g)[0] if len(g) > 1 else c)
    if out and out[0] < 0:
        out = [-v for v in out]
    return out


def square_free(p, cutoff=DEFAULT.gcd_cutoff):
    """``p / gcd(p, p')``, scaled to unit max-norm with positive leading coefficient."""
    return Poly(_lsquare_free(list(_as_poly(p).coeffs), cutoff))


def _lchain(c, cutoff):
    p0 = _lsquare_free(c, cutoff)
    if len(p0) <= 1:
        return [p0]
    chain = [p0, _lunit(_lderiv(p0))]
    while len(chain[-1]) > 1:
        _, r = _ldiv(chain[-2], chain[-1])
        if not r or max(abs(v) for v in r) <= cutoff:
            break
        r = _ltrim([-v for v in r], cutoff)
        chain.append(_lunit(r))
    return chain


def sturm_chain(p, cutoff=DEFAULT.gcd_cutoff):
    """Sturm sequence of the square-free part of ``p``; each member has unit max-norm."""
    return [np.array(c) for c in _lchain(list(_as_poly(p).coeffs), cutoff)]


def _sign_changes(values):
    prev = 0
    n = 0
    for v in values:
        if v == 0.0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            n += 1
        prev = s
    return n


def _variations(chain, x):
    if x == math.inf:
        return _sign_changes([c[0] for c in chain])
    if x == -math.inf:
        return _sign_changes([c[0] * (-1) ** (len(c) - 1) for c in chain])
    return _sign_changes([_horner(c, x) for c in chain])


def _near_root(c0, x, tau):
    if not math.isfinite(x):
        return False
    mag = _horner([abs(v) for v in c0], abs(x))
    return abs(_horner(c0, x)) <= tau * mag


def _count_with_chain(chain, lo, hi, tau):
    if lo != -math.inf and _near_root(chain[0], lo, tau):
        lo = lo + tau * max(1.0, abs(lo))
    if hi != math.inf and _near_root(chain[0], hi, tau):
        hi = hi + tau * max(1.0, abs(hi))
    return _variations(chain, lo) - _variations(chain, hi)


def sturm_count(p, lo=-math.inf, hi=math.inf, tol: Tolerances = DEFAULT):
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    Multiplicities are collapsed by a square-free reduction first. An endpoint
    sitting on a root (relative residual below ``tau_root``) is nudged right, so
    a root at ``lo`` is excluded and a root at ``hi`` is included.
    """
    p = _as_poly(p)
    if p.is_zero():
        raise ZeroPolynomial("sturm_count of the zero polynomial")
    if not lo < hi:
        raise ValueError("need lo < hi")
    chain = _lchain(list(p.coeffs), tol.gcd_cutoff)
    return _count_with_chain(chain, lo, hi, tol.tau_root)


def cauchy_bound(p):
    c = list(_as_poly(p).coeffs)
    if len(c) <= 1:
        return 1.0
    return 1.0 + max(abs(v / c[0]) for v in c[1:])


def real_roots(p, lo=-math.inf, hi=math.inf, tol: Tolerances = DEFAULT):
    """Distinct real roots in ``(lo, hi]``, ascending, each to relative width ``tau_root``.

    Isolation splits intervals by Sturm counts until each holds one root,
    then bisects on the sign of the square-free part.
    """
    p = _as_poly(p)
    if p.is_zero():
        raise ZeroPolynomial("real_roots of the zero polynomial")
    if p.degree <= 0:
        return []
    chain = _lchain(list(p.coeffs), tol.gcd_cutoff)
    sq = chain[0]
    if len(sq) <= 1:
        return []
    tau = tol.tau_root
    bound = cauchy_bound(sq)
    lo_b = max(lo, -bound * (1 + 1e-9) - 1e-9)
    hi_b = min(hi, bound * (1 + 1e-9) + 1e-9)
    if not lo_b < hi_b:
        return []
    roots = []
    stack = [(lo_b, hi_b, _count_with_chain(chain, lo_b, hi_b, tau))]
    while stack:
        l, h, k = stack.pop()
        if k <= 0:
            continue
        if k == 1:
            roots.append(_refine(chain, l, h, tau))
            continue
        mid = 0.5 * (l + h)
        if h - l <= tau * max(1.0, abs(mid)):
            # unresolvable cluster; report once per root count
            roots.extend([mid] * k)
            continue
        kl = _count_with_chain(chain, l, mid, tau)
        stack.append((mid, h, k - kl))
        stack.append((l, mid, kl))
    return sorted(roots)


def _refine(chain, l, h, tau):
    sq = chain[0]
    fl = _horner(sq, l)
    fh = _horner(sq, h)
    if fh == 0.0:
        return h
    use_sign = fl != 0.0 and (fl > 0) != (fh > 0)
    for _ in range(2000):
        mid = 0.5 * (l + h)
        if h - l <= tau * max(1.0, abs(mid)) or mid in (l, h):
            break
        if use_sign:
            fm = _horner(sq, mid)
            if fm == 0.0:
                return mid
            if (fm > 0) == (fl > 0):
                l, fl = mid, fm
            else:
                h = mid
        else:
            if _count_with_chain(chain, l, mid, tau) >= 1:
                h = mid
            else:
                l = mid
    return 0.5 * (l + h)


# --------------------------------------------------------------------------
# weighted minimization on [0, inf)


def _is_one_plus_t_pow(w):
    m = w.degree
    if m < 0:
        return None
    ref = one_plus_t_pow(m).arr * w.lead
    return m if np.allclose(w.arr, ref, rtol=1e-14, atol=0.0) else None


def isolate_min_on_halfline(p, w=None, tol: Tolerances = DEFAULT):
    """Global minimizer of ``p(t)/w(t)`` over ``[0, inf)``. Returns ``(t_star, value)``.

    ``w`` defaults to ``(1+t)^deg(p)`` and must be positive on the half-line.
    When the infimum is only approached as ``t -> inf``, ``t_star`` is ``inf``.
    Ties are broken toward the smallest ``t``.
    """
    p = _as_poly(p)
    w = one_plus_t_pow(max(p.degree, 0)) if w is None else _as_poly(w)
    if w.is_zero() or w(0.0) <= 0 or w.lead <= 0 or (w.degree > 0 and sturm_count(w, 0.0, math.inf, tol) > 0):
        raise ValueError("weight must be positive on [0, inf)")
    if p.is_zero():
        return 0.0, 0.0

    dp, dw = p.degree, w.degree
    if dp > dw:
        if p.lead < 0:
            raise Unbounded("p/w tends to -inf")
        at_inf = math.inf
    elif dp == dw:
        at_inf = p.lead / w.lead
    else:
        at_inf = 0.0

    m = _is_one_plus_t_pow(w)
    if m is not None:
        # p'w - pw' = (1+t)^(m-1) * (p'(1+t) - m p) / lead(w) scaling aside
        D = p.deriv() * Poly([1.0, 1.0]) - m * p
    else:
        D = p.deriv() * w - p * w.deriv()
    D = D.trim(1e-15)

    best_t, best_v = 0.0, float(p(0.0) / w(0.0))
    if D.degree >= 1:
        for t in real_roots(D, 0.0, math.inf, tol):
            v = float(p(t) / w(t))
            if v < best_v:
                best_t, best_v = t, v
    if at_inf < best_v:
        best_t, best_v = math.inf, at_inf
    return best_t, best_v


# --------------------------------------------------------------------------
# discrete-time entry point


def bilinear_to_s(p_z):
    """Numerator of ``p_z((1+s)/(1-s)) * (1-s)^m`` with ``m = deg p_z``.

    Unit-disk (Schur) roots map to open left half-plane roots. If ``z = -1``
    is a root the image loses degree; a :class:`DegreeDrop` warning is issued
    and the trimmed polynomial returned.
    """
    p_z = _as_poly(p_z)
    if p_z.is_zero():
        raise ZeroPolynomial("bilinear_to_s of the zero polynomial")
    m = p_z.degree
    plus = Poly([1.0, 1.0])
    minus = Poly([-1.0, 1.0])
    out = np.zeros(m + 1)
    for i, coef in enumerate(p_z.coeffs):
        k = m - i  # power of z
        term = (plus ** k) * (minus ** (m - k))
        out += coef * term.arr
    scale = float(np.max(np.abs(out)))
    if abs(out[0]) <= 1e-12 * scale:
        warnings.warn("z = -1 is a root; bilinear image dropped degree", DegreeDrop, stacklevel=2)
        out = _trim(out, 1e-12)
    return Poly(out)
