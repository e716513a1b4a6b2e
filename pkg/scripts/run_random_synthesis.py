"""Synthesize common SPR numerators for random stable segments and summarize.

Each instance is a pair of monic Hurwitz polynomials built from random
real / complex-pair factors whose whole segment is stable. Reports success
rate, margins, timings and segment-wide verification per degree; optionally
dumps every certificate as JSON lines.

    python scripts/run_random_synthesis.py --count 200 --degrees 3 4 5 6 7 8
    python scripts/run_random_synthesis.py --root-scale 0.05 20 --count 100
"""

import json
import time
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from _config import parse_config
from robustspr import hurwitz_test, synthesize, verify_certificate
from robustspr.errors import SPRError
from robustspr.polycore import Poly
from robustspr.samplers import perturb_roots, random_stable, stable_factor_roots
from robustspr.stability import segment_stable
from robustspr.synthesis import certificate_document


@dataclass(frozen=True)
class Config:
    seed: int = 20240611
    count: int = 200
    degrees: tuple = (3, 4, 5, 6, 7, 8)
    root_scale: tuple = (0.5, 5.0)
    lambda_points: int = 101
    dump: str = ""


def draw_pair(rng, n, scale):
    while True:
        ra = stable_factor_roots(rng, n, scale=scale)
        a = Poly.from_roots(ra)
        b = random_stable(rng, n, scale=scale) if rng.random() < 0.3 else Poly.from_roots(perturb_roots(rng, ra))
        if segment_stable(a, b).stable:
            return a, b


def main(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    stats = defaultdict(lambda: defaultdict(list))
    sink = open(cfg.dump, "w") if cfg.dump else None
    for i in range(cfg.count):
        n = cfg.degrees[i % len(cfg.degrees)]
        a, b = draw_pair(rng, n, cfg.root_scale)
        t0 = time.perf_counter()
        try:
            res = synthesize(a, b)
        except SPRError as exc:
            stats[n]["failures"].append(type(exc).__name__)
            continue
        dt = time.perf_counter() - t0
        s = stats[n]
        s["time"].append(dt)
        s["margin"].append(min(res.margin_a, res.margin_b))
        s["iterations"].append(res.iterations)
        s["rescaled"].append(res.scale != 1.0)
        s["segment_ok"].append(verify_certificate(res, a, b, K=cfg.lambda_points))
        s["hurwitz"].append(hurwitz_test(res.c_final))
        if sink:
            sink.write(json.dumps(certificate_document(res, a, b), sort_keys=True) + "\n")
    if sink:
        sink.close()

    print(f"{'n':>2} {'ok':>5} {'fail':>4} {'min margin':>11} {'med iters':>9} "
          f"{'max time':>9} {'rescaled':>8} {'segment':>7} {'hurwitz':>7}")
    for n in sorted(stats):
        s = stats[n]
        ok = len(s["time"])
        if ok:
            print(f"{n:>2} {ok:>5} {len(s['failures']):>4} {min(s['margin']):>11.3e} "
                  f"{int(np.median(s['iterations'])):>9} {max(s['time']):>8.3f}s {sum(s['rescaled']):>8} "
                  f"{sum(s['segment_ok']):>7} {sum(s['hurwitz']):>7}")
        else:
            print(f"{n:>2} {0:>5} {len(s['failures']):>4}")
        if s["failures"]:
            print(f"   failures: {sorted(set(s['failures']))}")


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__.splitlines()[0]))
