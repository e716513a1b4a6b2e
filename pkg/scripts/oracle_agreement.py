"""Compare the exact checks with dense-grid oracles on random inputs.

Segment stability: analytic crossing test vs the lambda-grid Routh oracle,
restricted to pairs whose closest segment root stays a guard distance away
from the imaginary axis (measured on the grid with companion eigenvalues).
Positivity: Sturm-certified verdict vs the sign of min Re[c(jw)/d(jw)] on a
log-spaced frequency grid, restricted to |margin| above a guard.

    python scripts/oracle_agreement.py --pairs 300 --grid 10000
"""

from dataclasses import dataclass

import numpy as np

from _config import parse_config
from robustspr.samplers import random_monic_logcoeffs, random_stable
from robustspr.sprcheck import verify_positivity
from robustspr.stability import segment_grid_oracle, segment_stable


@dataclass(frozen=True)
class Config:
    seed: int = 1
    pairs: int = 300
    grid: int = 10_000
    min_degree: int = 3
    max_degree: int = 8
    root_guard: float = 1e-4
    margin_guard: float = 1e-6
    stable_endpoints: int = 0  # 1: draw endpoints from random stable factors instead


def closest_root_distance(a, b, K):
    lam = np.linspace(0.0, 1.0, K)[:, None]
    P = (1 - lam) * a.arr + lam * b.arr
    n = a.degree
    C = np.zeros((K, n, n))
    C[:, 0, :] = -P[:, 1:] / P[:, :1]
    C[:, np.arange(1, n), np.arange(n - 1)] = 1.0
    return float(np.min(np.abs(np.linalg.eigvals(C).real)))


def main(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    seg = {"checked": 0, "agree": 0, "stable": 0, "guarded": 0}
    for _ in range(cfg.pairs):
        n = int(rng.integers(cfg.min_degree, cfg.max_degree + 1))
        if cfg.stable_endpoints:
            a, b = random_stable(rng, n, zeta=(0.02, 0.6)), random_stable(rng, n, zeta=(0.02, 0.6))
        else:
            a, b = random_monic_logcoeffs(rng, n), random_monic_logcoeffs(rng, n)
        if closest_root_distance(a, b, cfg.grid) <= cfg.root_guard:
            seg["guarded"] += 1
            continue
        v = segment_stable(a, b).stable
        seg["checked"] += 1
        seg["stable"] += v
        seg["agree"] += v == segment_grid_oracle(a, b, cfg.grid)

    w = np.r_[0.0, np.logspace(-4, 4, cfg.grid - 1)]
    pos = {"checked": 0, "agree": 0, "positive": 0, "guarded": 0}
    for _ in range(cfg.pairs):
        n = int(rng.integers(cfg.min_degree - 1, cfg.max_degree + 1))
        d = random_stable(rng, n)
        c = random_monic_logcoeffs(rng, n - int(rng.integers(0, 2)), 0.05, 50.0)
        rep = verify_positivity(c, d)
        if abs(rep.margin) <= cfg.margin_guard:
            pos["guarded"] += 1
            continue
        grid_pos = np.min(np.real(np.polyval(c.coeffs, 1j * w) / np.polyval(d.coeffs, 1j * w))) > 0
        pos["checked"] += 1
        pos["positive"] += rep.positive
        pos["agree"] += rep.positive == grid_pos

    print(f"segment stability: {seg['agree']}/{seg['checked']} agree "
          f"({seg['stable']} stable, {seg['guarded']} skipped by the root guard)")
    print(f"positivity:        {pos['agree']}/{pos['checked']} agree "
          f"({pos['positive']} positive, {pos['guarded']} skipped by the margin guard)")


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__.splitlines()[0]))
