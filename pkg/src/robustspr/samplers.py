"""Random test instances: stable polynomials built from factors, and pairs of them."""

import numpy as np

from .polycore import Poly
from .stability import hurwitz_test, segment_stable


def log_uniform(rng, lo, hi, size=None):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size))


def stable_factor_roots(rng, n, scale=(0.5, 5.0), zeta=(0.05, 1.0)):
    """Roots of a random degree-``n`` Hurwitz polynomial built from real and complex-pair factors."""
    roots = []
    while len(roots) < n:
        if n - len(roots) >= 2 and rng.random() < 0.5:
            wn = log_uniform(rng, *scale)
            z = rng.uniform(*zeta)
            re, im = -z * wn, wn * np.sqrt(max(1.0 - z * z, 0.0))
            if im == 0.0:
                roots += [re, re]
            else:
                roots += [complex(re, im), complex(re, -im)]
        else:
            roots.append(-log_uniform(rng, *scale))
    return roots


def random_stable(rng, n, **kw):
    return Poly.from_roots(stable_factor_roots(rng, n, **kw))


def perturb_roots(rng, roots, spread=0.6):
    """Move each real root / conjugate pair multiplicatively, keeping it in the left half-plane."""
    out = []
    done = set()
    for i, r in enumerate(roots):
        if i in done:
            continue
        f = log_uniform(rng, 1.0 / (1.0 + spread), 1.0 + spread)
        if isinstance(r, complex) and r.imag != 0:
            j = next(k for k in range(i + 1, len(roots)) if k not in done and np.isclose(roots[k], np.conj(r)))
            ang = np.angle(r) + rng.uniform(-0.15, 0.15)
            ang = np.clip(ang, np.pi / 2 + 0.02, np.pi - 0.01)
            z = abs(r) * f * np.exp(1j * ang)
            out += [z, np.conj(z)]
            done.update({i, j})
        else:
            out.append(r.real * f if isinstance(r, complex) else r * f)
            done.add(i)
    return out


def random_stable_segment(rng, n, max_tries=1000):
    """Pair of monic degree-``n`` Hurwitz polynomials whose whole segment is stable."""
    for _ in range(max_tries):
        ra = stable_factor_roots(rng, n)
        a = Poly.from_roots(ra)
        if rng.random() < 0.3:
            b = random_stable(rng, n)
        else:
            b = Poly.from_roots(perturb_roots(rng, ra))
        if segment_stable(a, b).stable:
            return a, b
    raise RuntimeError("no stable segment found")


def random_unstable_segment(rng, n, max_tries=10000):
    """Pair of Hurwitz endpoints with a non-Hurwitz member in between."""
    for _ in range(max_tries):
        a = random_stable(rng, n, zeta=(0.02, 0.6))
        b = random_stable(rng, n, zeta=(0.02, 0.6))
        v = segment_stable(a, b)
        if not v.stable:
            return a, b, v
    raise RuntimeError("no unstable segment found")


def random_monic_logcoeffs(rng, n, lo=0.1, hi=100.0):
    return Poly(np.r_[1.0, log_uniform(rng, lo, hi, n)])


def random_hurwitz_logcoeffs(rng, n, lo=0.1, hi=100.0, max_tries=100000):
    for _ in range(max_tries):
        p = random_monic_logcoeffs(rng, n, lo, hi)
        if hurwitz_test(p):
            return p
    raise RuntimeError("no Hurwitz polynomial found")


def _schur_factors(rng, n, rmax):
    # (radius, angle) per conjugate pair, (real root, None) per real factor
    out, k = [], 0
    while k < n:
        if n - k >= 2 and rng.random() < 0.5:
            out.append((rmax * np.sqrt(rng.uniform()), rng.uniform(0.0, np.pi)))
            k += 2
        else:
            out.append((rng.uniform(-rmax, rmax), None))
            k += 1
    return out


def _factor_roots(factors):
    roots = []
    for r, th in factors:
        roots += [r] if th is None else [r * np.exp(1j * th), r * np.exp(-1j * th)]
    return roots


def random_schur_pair(rng, n, rmax=0.9, spread=0.15):
    """Two monic degree-``n`` polynomials with all roots inside ``|z| <= rmax``.

    The second is an independent draw 30% of the time, otherwise a
    perturbation of the first (radii scaled, angles nudged).
    """
    fa = _schur_factors(rng, n, rmax)
    if rng.random() < 0.3:
        fb = _schur_factors(rng, n, rmax)
    else:
        fb = [
            (
                float(np.clip(r * rng.uniform(1 - spread, 1 + spread), -rmax, rmax)),
                None if th is None else float(np.clip(th + rng.uniform(-0.3, 0.3), 0.01, np.pi - 0.01)),
            )
            for r, th in fa
        ]
    return Poly.from_roots(_factor_roots(fa)), Poly.from_roots(_factor_roots(fb))
