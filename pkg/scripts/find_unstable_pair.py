"""Randomized search for Hurwitz endpoint pairs whose segment leaves the Hurwitz set.

Candidates are integer-coefficient monic polynomials; the lambda-grid Routh oracle
is the ground truth. Prints the pair with the widest unstable lambda range.

    python scripts/find_unstable_pair.py --degree 3 --trials 20000 --seed 7
"""

from dataclasses import dataclass

import numpy as np

from _config import parse_config

from robustspr import Poly, hurwitz_test, segment_grid_oracle, segment_stable
from robustspr.stability import routh_first_column_ok


def draw(rng, n, hi):
    # integers spread log-uniformly over [1, hi]
    return np.round(np.exp(rng.uniform(0.0, np.log(hi), n)))


def unstable_fraction(a, b, K=2001):
    lam = np.linspace(0.0, 1.0, K)[:, None]
    ok = routh_first_column_ok((1 - lam) * a.arr + lam * b.arr)
    return 1.0 - ok.mean()


@dataclass(frozen=True)
class Config:
    degree: int = 3
    trials: int = 20000
    seed: int = 7
    max_coeff: int = 100


def main(args: Config):
    rng = np.random.default_rng(args.seed)
    best = None
    for _ in range(args.trials):
        a = Poly(np.r_[1, draw(rng, args.degree, args.max_coeff)])
        b = Poly(np.r_[1, draw(rng, args.degree, args.max_coeff)])
        if not (hurwitz_test(a) and hurwitz_test(b)):
            continue
        if segment_grid_oracle(a, b, 10_000):
            continue
        frac = unstable_fraction(a, b)
        if best is None or frac > best[0]:
            best = (frac, a, b)
    if best is None:
        print("no unstable segment found")
        return
    frac, a, b = best
    v = segment_stable(a, b)
    print(f"a = {a.to_list()}")
    print(f"b = {b.to_list()}")
    print(f"unstable lambda fraction ~ {frac:.3f}")
    print(f"analytic verdict: {v}")


if __name__ == "__main__":
    main(parse_config(Config, description=__doc__.splitlines()[0]))
