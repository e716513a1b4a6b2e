import math

import numpy as np
import pytest

from robustspr.config import Tolerances
from robustspr.errors import IterationLimit, SegmentUnstable
from robustspr.polycore import Poly, normalize_monic
from robustspr.samplers import random_stable_segment
from robustspr.sprcheck import CandidatePoint, coefficient_map, spr_numerator, verify_positivity, verify_spr
from robustspr.stability import hurwitz_test
from robustspr.synthesis import (
    FeasibilityProblem,
    apply_epsilon,
    find_common_point,
    lift_degree,
    select_epsilon,
    synthesize,
    verify_certificate,
)

from conftest import UNSTABLE_A, UNSTABLE_B
from oracles import min_real_part_ratio, weighted_min_numerator

cube1 = Poly([1, 3, 3, 1])
cube2 = Poly.from_roots([-2, -2, -2])


def _weighted_margin(x, a):
    N = spr_numerator(CandidatePoint(x).poly, a)
    return weighted_min_numerator(N, a.degree - 1)


def test_common_point_identical_endpoints():
    x = find_common_point(cube1, cube1)
    assert verify_positivity(x.poly, cube1).positive


def _ellipse_value(a, x):
    a1, a2, a3 = a.coeffs[1:]
    x1, x2 = x
    return (a2 * x1 - a1 * x2 - a3) ** 2 - 4 * (a1 - x1) * (a3 * x2)


def _in_quadratic_positivity_region(a, x):
    # c1 t^2 + c2 t + c3 > 0 on [0, inf): ends positive and either no real
    # roots or both roots negative
    c1, c2, c3 = coefficient_map(a, x)
    return c1 > 0 and c3 > 0 and (c2 * c2 - 4 * c1 * c3 < 0 or c2 > 0)


def test_common_point_cubes_margin():
    x = find_common_point(cube1, cube2)
    for a in (cube1, cube2):
        assert _weighted_margin(x.x, a) >= 1e-6
        assert _in_quadratic_positivity_region(a, x.x)
    # frozen: the margin-maximizing point is (s+1)^2, whose numerator against
    # (s+1)^3 is (t+1)^2; it sits on that ellipse, strictly inside the other
    np.testing.assert_allclose(x.x, (2.0, 1.0), atol=1e-9)
    assert abs(_ellipse_value(cube1, x.x)) < 1e-9
    assert _ellipse_value(cube2, x.x) < 0


def test_common_point_random_cubics_in_positivity_region(rng):
    for _ in range(30):
        a, b = random_stable_segment(rng, 3)
        x = find_common_point(a, b)
        assert _in_quadratic_positivity_region(a, x.x) and _in_quadratic_positivity_region(b, x.x)


def test_common_point_unstable_segment():
    with pytest.raises(SegmentUnstable) as err:
        find_common_point(Poly(UNSTABLE_A), Poly(UNSTABLE_B))
    assert err.value.verdict.witness_lambda == pytest.approx(0.17875944538202002)


def test_iteration_limit_reports_best_margin(rng):
    a, b = random_stable_segment(rng, 6)
    with pytest.raises(IterationLimit) as err:
        find_common_point(a, b, Tolerances(max_iters=1, eta=1e3))
    assert err.value.iterations >= 1 and math.isfinite(err.value.best_margin)


def test_feasibility_problem_deduplicates_cuts():
    prob = FeasibilityProblem(cube1, cube2, 30.0)
    assert prob.add_cut("a", 1.0) and not prob.add_cut("a", 1.0)
    assert prob.add_cut("b", 1.0) and prob.add_cut("a", math.inf)
    np.testing.assert_allclose(prob.numerator("a", [1.0, 1.0]).coeffs, coefficient_map(cube1, (1.0, 1.0)))


def test_apply_epsilon_examples():
    assert apply_epsilon(CandidatePoint((1.0, 1.0)), 0.0) == Poly([1, 1, 1])
    assert apply_epsilon(CandidatePoint((1.0, 1.0)), 0.25) == Poly([1, 0.75, 1.25])
    assert apply_epsilon((1.0, 2.0, 3.0, 4.0), 0.5) == Poly([1, 0.5, 2, 3, 4.5])
    with pytest.raises(ValueError):
        apply_epsilon((1.0, 1.0), -1.0)


def test_select_epsilon_tight_up_to_factor_two(rng):
    tol = Tolerances()
    for _ in range(10):
        a, b = random_stable_segment(rng, int(rng.integers(3, 7)))
        x = find_common_point(a, b)
        eps = select_epsilon(a, b, x)
        assert eps > 0
        if eps < tol.eta:
            c = apply_epsilon(x, 2 * eps)
            ok = all(r.positive and r.margin >= tol.eta / 2 for r in (verify_positivity(c, a), verify_positivity(c, b)))
            assert not ok
        # growing epsilon must eventually break one of the checks
        e = eps
        for _ in range(80):
            e *= 2
            c = apply_epsilon(x, e)
            if not (verify_positivity(c, a).positive and verify_positivity(c, b).positive):
                break
        else:
            pytest.fail("epsilon never broke positivity")


def test_select_epsilon_symmetric_for_equal_endpoints():
    x = find_common_point(cube1, cube1)
    assert select_epsilon(cube1, cube1, x) == select_epsilon(cube1, cube1, x)


def test_lift_degree_single_endpoint():
    c = Poly([1, 2, 1])  # (s+1)^2 / (s+1)^3 is positive real part
    ct, delta = lift_degree(c, cube1, cube1, h=cube1)
    assert delta > 0 and ct.degree == 3 and ct.lead == delta
    assert verify_spr(ct, cube1).ok
    assert verify_spr(normalize_monic(ct)[0], cube1).ok  # SPR is scale invariant


def test_lift_degree_doubling_eventually_fails(rng):
    broke = False
    for _ in range(10):
        a, b = random_stable_segment(rng, int(rng.integers(3, 7)))
        x = find_common_point(a, b)
        c = apply_epsilon(x, select_epsilon(a, b, x))
        h = Poly.from_roots([-10.0] * a.degree)  # far-away roots stress the positivity condition
        ct, delta = lift_degree(c, a, b, h=h)
        assert verify_spr(ct, a) and verify_spr(ct, b)
        d = delta
        for _ in range(40):
            d *= 2
            if not (verify_spr(c + d * h, a) and verify_spr(c + d * h, b)):
                broke = True
                break
    assert broke


def test_synthesize_identical_cubes():
    res = synthesize(cube1, cube1)
    assert verify_spr(res.c_final, cube1).ok


def test_synthesize_cubes_grid_confirmed():
    res = synthesize(cube1, cube2)
    assert res.margin_a > 1e-9 and res.margin_b > 1e-9
    for d in (cube1, cube2):
        assert min_real_part_ratio(res.c_final, d) > 0
    assert hurwitz_test(res.c_final)
    expected = apply_epsilon(res.x, res.epsilon) + res.delta * res.h
    np.testing.assert_allclose(res.c_final.coeffs, expected.coeffs, rtol=0, atol=1e-12)
    assert res.h == Poly((np.asarray(cube1.coeffs) + np.asarray(cube2.coeffs)) / 2)


def test_synthesize_unstable_segment():
    with pytest.raises(SegmentUnstable):
        synthesize(Poly(UNSTABLE_A), Poly(UNSTABLE_B))


def test_synthesize_unstable_endpoint():
    with pytest.raises(SegmentUnstable):
        synthesize(cube1, Poly([1, 1, 1, 1]))


def test_synthesize_requires_monic():
    with pytest.raises(ValueError):
        synthesize(Poly([2, 6, 6, 2]), cube1)


def test_synthesize_degree_one():
    a, b = Poly([1, 2]), Poly([1, 0.5])
    res = synthesize(a, b)
    assert res.c_final == Poly([1, 0.25])
    assert verify_spr(res.c_final, a) and verify_spr(res.c_final, b)
    assert verify_certificate(res, a, b)


def test_synthesize_degree_two(rng):
    for _ in range(20):
        a, b = random_stable_segment(rng, 2)
        res = synthesize(a, b)
        assert verify_spr(res.c_final, a) and verify_spr(res.c_final, b)
        assert verify_certificate(res, a, b, K=51)


def test_certificate_checks():
    res = synthesize(cube1, cube2)
    assert verify_certificate(res, cube1, cube2, K=2)
    assert verify_certificate(res, cube1, cube2, K=101)
    tampered = list(res.c_final.coeffs)
    tampered[1] = -tampered[1]
    assert not verify_certificate(Poly(tampered), cube1, cube2, K=101)
    with pytest.raises(ValueError):
        verify_certificate(res, cube1, cube2, K=1)


def test_determinism(rng):
    a, b = random_stable_segment(rng, 6)
    r1, r2 = synthesize(a, b), synthesize(a, b)
    assert r1 == r2 and r1.to_dict() == r2.to_dict()


def test_small_scale_pair_uses_rescaling():
    # roots near 0.1 push weighted margins below eta at the original scale
    a, b = Poly.from_roots([-0.1] * 4), Poly.from_roots([-0.15] * 4)
    res = synthesize(a, b)
    sigma = res.scale
    assert sigma == pytest.approx((a.coeffs[-1] * b.coeffs[-1]) ** (1 / 8))
    assert verify_spr(res.c_final, a) and verify_spr(res.c_final, b)
    assert verify_certificate(res, a, b)
    unit = apply_epsilon(res.x, res.epsilon) + res.delta * res.h
    mapped = [c * sigma**k for k, c in enumerate(unit.coeffs)]
    np.testing.assert_allclose(res.c_final.coeffs, mapped, rtol=1e-12)
    assert res.to_dict()["frequency_scale"] == sigma


def test_rescale_divides_roots():
    from robustspr.synthesis import rescale

    p = Poly.from_roots([-1.0, -2.0])
    np.testing.assert_allclose(sorted(np.roots(rescale(p, 2.0).arr)), [-1.0, -0.5])
