"""Discrete-time entry point: Schur pairs mapped to Hurwitz pairs, then synthesized.

Random monic pairs with roots inside |z| <= rmax are screened with a lambda
grid on the unit circle; confirmed pairs go through z = (1+s)/(1-s) and the
continuous-time pipeline.

    python scripts/discrete_synthesis.py --count 50 --rmax 0.9
"""

from dataclasses import dataclass

import numpy as np

from _config import parse_config
from robustspr import bilinear_to_s, normalize_monic, segment_stable, synthesize, verify_certificate
from robustspr.errors import SPRError
from robustspr.samplers import random_schur_pair


@dataclass(frozen=True)
class Config:
    seed: int = 9
    count: int = 50
    min_degree: int = 3
    max_degree: int = 6
    rmax: float = 0.9
    grid: int = 10_000


def schur_on_grid(za, zb, K):
    lam = np.linspace(0.0, 1.0, K)
    return all(np.all(np.abs(np.roots((1 - l) * za.arr + l * zb.arr)) < 1.0) for l in lam)


def main(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    tally = {"confirmed": 0, "mapped_stable": 0, "certified": 0, "rescaled": 0}
    for i in range(cfg.count):
        n = cfg.min_degree + i % (cfg.max_degree - cfg.min_degree + 1)
        za, zb = random_schur_pair(rng, n, rmax=cfg.rmax)
        if not schur_on_grid(za, zb, cfg.grid):
            continue
        tally["confirmed"] += 1
        a, b = normalize_monic(bilinear_to_s(za))[0], normalize_monic(bilinear_to_s(zb))[0]
        if not segment_stable(a, b).stable:
            print(f"mapped segment unstable: {za.to_list()} / {zb.to_list()}")
            continue
        tally["mapped_stable"] += 1
        try:
            res = synthesize(a, b)
        except SPRError as exc:
            print(f"n={n}: {type(exc).__name__}: {exc}")
            continue
        tally["certified"] += verify_certificate(res, a, b)
        tally["rescaled"] += res.scale != 1.0
    print(", ".join(f"{k} {v}" for k, v in tally.items()))


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__.splitlines()[0]))
