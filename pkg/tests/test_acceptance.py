"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``CRITERION k: PASS|FAIL ...`` line to the terminal
(visible without ``-s``) and then asserts.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from robustspr.errors import SegmentUnstable, SPRError
from robustspr.polycore import Poly, bilinear_to_s, normalize_monic
from robustspr.samplers import (
    random_monic_logcoeffs,
    random_schur_pair,
    random_stable,
    random_stable_segment,
    random_unstable_segment,
)
from robustspr.sprcheck import coefficient_map, spr_numerator, verify_positivity, verify_spr
from robustspr.stability import hurwitz_test, segment_grid_oracle, segment_stable
from robustspr.synthesis import synthesize, verify_certificate

from loci import ellipse_n3_points, ellipse_n4_points
from oracles import min_real_part_ratio, schur_segment_grid, segment_eig_profile

SEED = 20240611


def report(request, k, ok, detail):
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    capman = request.config.pluginmanager.getplugin("capturemanager")
    with capman.global_and_fixture_disabled():
        sys.stdout.write("\n" + line + "\n")
    assert ok, line


@pytest.fixture(scope="module")
def synthesis_runs():
    """200 stable-segment pairs, n in 3..8, with their synthesis outcomes."""
    rng = np.random.default_rng(SEED)
    runs = []
    for i in range(200):
        n = 3 + i % 6
        a, b = random_stable_segment(rng, n)
        t0 = time.perf_counter()
        try:
            res = synthesize(a, b)
        except SPRError as exc:
            res = exc
        runs.append((a, b, res, time.perf_counter() - t0))
    return runs


def test_criterion_1_sufficiency(request, synthesis_runs):
    failures, worst_t, worst_m = 0, 0.0, np.inf
    for a, b, res, dt in synthesis_runs:
        worst_t = max(worst_t, dt)
        if isinstance(res, Exception):
            failures += 1
            continue
        ra, rb = verify_spr(res.c_final, a), verify_spr(res.c_final, b)
        m = min(res.margin_a, res.margin_b)
        worst_m = min(worst_m, m)
        if not (ra.ok and rb.ok and m >= 1e-9 and dt < 1.0):
            failures += 1
    ok = failures == 0
    report(request, 1, ok, f"{len(synthesis_runs) - failures}/{len(synthesis_runs)} certified; "
           f"min weighted margin {worst_m:.3e}; slowest {worst_t:.3f}s")


def test_criterion_2_necessity(request):
    rng = np.random.default_rng(SEED + 2)
    rejected, false_certs, grid_confirmed = 0, 0, 0
    for i in range(100):
        a, b, _ = random_unstable_segment(rng, 3 + i % 6)
        grid_confirmed += not segment_grid_oracle(a, b, 10**4)
        try:
            synthesize(a, b)
            false_certs += 1
        except SegmentUnstable:
            rejected += 1
    ok = rejected == 100 and false_certs == 0
    report(request, 2, ok, f"{rejected}/100 SegmentUnstable, {false_certs} false certificates "
           f"({grid_confirmed}/100 also caught by the 1e4 lambda grid)")


def test_criterion_3_segment_wide(request, synthesis_runs):
    done = [(a, b, r) for a, b, r, _ in synthesis_runs if not isinstance(r, Exception)]
    passed = sum(verify_certificate(r, a, b, K=101) for a, b, r in done)
    ok = passed == len(done) == len(synthesis_runs)
    report(request, 3, ok, f"{passed}/{len(synthesis_runs)} certificates SPR at 101 lambdas")


def test_criterion_4_numerator_hurwitz(request, synthesis_runs):
    done = [r for _, _, r, _ in synthesis_runs if not isinstance(r, Exception)]
    passed = sum(hurwitz_test(r.c_final) for r in done)
    ok = passed == len(done) == len(synthesis_runs)
    report(request, 4, ok, f"{passed}/{len(synthesis_runs)} c_final Hurwitz")


def test_criterion_5_ellipse_fixtures(request):
    rng = np.random.default_rng(SEED + 5)
    worst3, n3, worst4, n4 = 0.0, 0, 0.0, 0
    for a, x, on_locus in ellipse_n3_points(rng, 100):
        if on_locus:
            c1, c2, c3 = coefficient_map(a, x)
            worst3 = max(worst3, abs(c2 * c2 - 4 * c1 * c3))
            n3 += 1
    for a, x, system in ellipse_n4_points(rng, 100):
        c1, c2, c3, c4 = coefficient_map(a, x)
        on_plane = c4 == 0.0 if system == 1 else c1 == 0.0
        disc = c2 * c2 - 4 * c1 * c3 if system == 1 else c3 * c3 - 4 * c2 * c4
        worst4 = max(worst4, abs(disc) if on_plane else np.inf)
        n4 += 1
    ok = worst3 <= 1e-8 and worst4 <= 1e-8 and n3 > 0 and n4 > 0
    report(request, 5, ok, f"n=3: {n3} locus points, max |disc| {worst3:.2e}; "
           f"n=4: {n4} points on both hyperplanes, max |disc| {worst4:.2e}")


def test_criterion_6_oracle_equivalence(request):
    rng = np.random.default_rng(SEED + 6)
    # positivity against a dense frequency grid
    pos_checked = pos_agree = pos_negative = 0
    for _ in range(500):
        n = int(rng.integers(2, 9))
        d = random_stable(rng, n)
        c = random_monic_logcoeffs(rng, n - int(rng.integers(0, 2)), 0.05, 50.0)
        rep = verify_positivity(c, d)
        if abs(rep.margin) <= 1e-6:
            continue
        pos_checked += 1
        pos_negative += not rep.positive
        pos_agree += rep.positive == (min_real_part_ratio(c, d) > 0)
    # segment stability against the lambda-grid Routh oracle
    seg_checked = seg_agree = seg_stable_cases = 0
    for _ in range(300):
        n = int(rng.integers(3, 9))
        a, b = random_monic_logcoeffs(rng, n), random_monic_logcoeffs(rng, n)
        if segment_eig_profile(a, b)[1] <= 1e-4:
            continue
        seg_checked += 1
        analytic = segment_stable(a, b).stable
        seg_agree += analytic == segment_grid_oracle(a, b, 10**4)
        seg_stable_cases += analytic
    ok = pos_agree == pos_checked > 0 and seg_agree == seg_checked > 0
    report(request, 6, ok, f"positivity {pos_agree}/{pos_checked} agree (of 500, {pos_negative} not positive); "
           f"segments {seg_agree}/{seg_checked} agree (of 300, {seg_stable_cases} stable)")


def test_criterion_7_coefficient_map(request):
    rng = np.random.default_rng(SEED + 7)
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(3, 11))
        a = random_monic_logcoeffs(rng, n)
        x = rng.uniform(0.0, 10.0, n - 1)
        c = coefficient_map(a, x)
        N = spr_numerator(Poly(np.r_[1.0, x]), a)
        ref = np.zeros(n)
        ref[n - len(N.coeffs):] = N.coeffs
        scale = np.max(np.abs(ref))
        worst = max(worst, float(np.max(np.abs(c - ref)) / scale))
    ok = worst <= 1e-10
    report(request, 7, ok, f"max relative deviation {worst:.2e} over 500 pairs")


def test_criterion_8_determinism(request, tmp_path):
    invocations = [
        ["synthesize", "--coeffs", "1,4,7,6,2", "--coeffs", "1,5,9,7,3"],
        ["synthesize", "--coeffs", "1,1,4,1", "--coeffs", "1,7,7,48"],
        ["check-segment", "--coeffs", "1,3,3,1", "--coeffs", "1,6,12,8", "--lambda-grid", "1000"],
        ["check-spr", "--coeffs", "1,2,3", "--coeffs", "1,3,2"],
        ["plot-data", "--coeffs", "1,2,1", "--coeffs", "1,3,3,1", "--coeffs", "1,6,12,8"],
        ["synthesize", "--discrete", "--coeffs", "1,-0.5,0.1", "--coeffs", "1,-0.3,0.05"],
    ]
    identical = 0
    for k, argv in enumerate(invocations):
        outs = []
        for rep in range(2):
            path = tmp_path / f"{k}_{rep}.out"
            proc = subprocess.run([sys.executable, "-m", "robustspr", *argv, "-o", str(path)],
                                  capture_output=True)
            outs.append((proc.returncode, path.read_bytes(), proc.stdout, proc.stderr))
        identical += outs[0] == outs[1]
    ok = identical == len(invocations)
    report(request, 8, ok, f"{identical}/{len(invocations)} invocations byte-identical across two runs")


def test_criterion_9_discrete_time(request):
    rng = np.random.default_rng(SEED + 9)
    confirmed = mapped_stable = certified = 0
    for i in range(50):
        za, zb = random_schur_pair(rng, 3 + i % 4)
        if not schur_segment_grid(za, zb):
            continue
        confirmed += 1
        a, b = normalize_monic(bilinear_to_s(za))[0], normalize_monic(bilinear_to_s(zb))[0]
        if not segment_stable(a, b).stable:
            continue
        mapped_stable += 1
        t0 = time.perf_counter()
        try:
            res = synthesize(a, b)
        except SPRError:
            continue
        dt = time.perf_counter() - t0
        good = (verify_spr(res.c_final, a).ok and verify_spr(res.c_final, b).ok
                and min(res.margin_a, res.margin_b) >= 1e-9 and dt < 1.0
                and verify_certificate(res, a, b, K=101) and hurwitz_test(res.c_final))
        certified += good
    ok = confirmed > 0 and mapped_stable == confirmed and certified == confirmed
    report(request, 9, ok, f"{confirmed}/50 Schur segments confirmed on the grid; "
           f"{mapped_stable} map to stable segments; {certified} certified")
