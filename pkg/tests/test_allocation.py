import random
from fractions import Fraction as F

import pytest

from adaptcache.allocation import (
    _solve_beta,
    allocate,
    baseline,
    binding_set,
    explicit,
    max_min,
    max_min_level,
    proportional_fairness,
    sum_quality,
)
from adaptcache.checks import random_scenario
from adaptcache.errors import DomainError, InfeasibleTargetError
from adaptcache.model import build_scenario, t_man
from adaptcache.timing import delivery_time

from .conftest import MULTI_ALPHA, Q_PFO, Q_SUM

SOLVERS = (baseline, proportional_fairness, max_min, sum_quality)


@pytest.fixture
def pair():
    return build_scenario(2, F(1, 2), [F(1, 2), 1])


def test_baseline_multirate(multirate):
    r = baseline(multirate)
    assert r.q == MULTI_ALPHA
    assert r.achieved_time == F(31, 24)
    assert r.warnings == ()


def test_baseline_undegraded():
    s = build_scenario(5, F(2, 5), [1] * 5)
    r = baseline(s)
    assert r.q == (1,) * 5 and r.achieved_time == t_man(5, 2)


def test_baseline_pair(pair):
    assert baseline(pair).achieved_time == F(1, 2) == pair.t_man


def test_pfo_multirate(multirate):
    r = proportional_fairness(multirate)
    assert r.beta == F(28, 25) == F(140, 125)
    assert r.q == Q_PFO
    assert r.achieved_time <= F(4, 3)
    assert r.binding


def test_pfo_undegraded():
    s = build_scenario(4, F(1, 4), [1] * 4)
    r = proportional_fairness(s)
    assert r.beta == 1 and r.q == (1,) * 4


def test_pfo_reiteration_helps(fig1):
    once = proportional_fairness(fig1, reiterate=False)
    twice = proportional_fairness(fig1)
    assert all(b >= a for a, b in zip(once.q, twice.q))
    assert any(b > a for a, b in zip(once.q, twice.q))
    assert twice.beta >= 1


def test_max_min_multirate(multirate):
    assert max_min_level(multirate) == F(25, 32)
    r = max_min(multirate)
    assert r.q == (F(25, 32), F(25, 32), F(25, 32), F(7, 8), 1, 1)


def test_max_min_undegraded():
    s = build_scenario(6, F(1, 2), [1] * 6)
    assert max_min_level(s) == 1
    assert max_min(s).q == (1,) * 6


def test_max_min_pair(pair):
    assert max_min_level(pair) == F(1, 2)
    assert max_min(pair).q == (F(1, 2), 1)


def test_sum_quality_multirate(multirate):
    r = sum_quality(multirate)
    assert r.q == Q_SUM
    assert r.achieved_time == F(4, 3)
    assert 2 in r.binding  # Q_1 is set by w = 2


def test_sum_quality_pair(pair):
    r = sum_quality(pair)
    assert r.q == (F(1, 2), 1) and sum(r.q) == F(3, 2)


def test_binding_set(multirate):
    assert binding_set(multirate, Q_SUM) == (2, 3, 4)
    assert binding_set(multirate, MULTI_ALPHA) == ()


def test_two_type_max_quality_matches_max_min(two_type):
    assert max_min(two_type).q == (F(5, 6), F(5, 6), 1, 1, 1, 1)
    assert sum_quality(two_type).q[:2] == (F(5, 6), F(5, 6))


def test_allocate_dispatch(multirate):
    assert allocate(multirate, "sum_quality").q == Q_SUM
    with pytest.raises(DomainError):
        allocate(multirate, "nope")
    with pytest.raises(DomainError):
        allocate(multirate, "explicit")


def test_explicit_original_order():
    s = build_scenario(4, F(1, 4), [1, F(1, 2), 1, 1])
    r = explicit(s, [1, F(1, 2), 1, 1])
    assert r.q == (F(1, 2), 1, 1, 1)
    assert s.to_original(list(r.q)) == [1, F(1, 2), 1, 1]


def test_explicit_infeasible(two_type):
    with pytest.raises(InfeasibleTargetError):
        explicit(two_type, [1] * 6)
    with pytest.raises(DomainError):
        explicit(two_type, [1] * 5)


def test_below_tman_scales_down(multirate):
    s = build_scenario(6, F(1, 3), MULTI_ALPHA, F(1))
    pfo = proportional_fairness(s)
    assert pfo.beta < 1
    for solver in (proportional_fairness, max_min, sum_quality):
        r = solver(s)
        assert r.achieved_time <= 1
        assert any("below T_MAN" in w for w in r.warnings)
    assert baseline(s).achieved_time > 1
    assert baseline(s).warnings[-1].startswith("baseline time")


def test_max_min_lift_stops_below_tman():
    s = build_scenario(4, F(1, 4), [F(1, 10), F(1, 10), 1, 1], F(1, 2))
    r = max_min(s)
    assert r.achieved_time <= F(1, 2)
    assert list(r.q) == sorted(r.q)


def test_tiny_target_stays_feasible():
    s = build_scenario(3, F(1, 3), [1, 1, 1], F(1, 10**6))
    r = sum_quality(s)
    assert 0 < r.q[0] < F(1, 10**5)
    assert r.achieved_time <= F(1, 10**6)


def test_pfo_infeasible_when_clamped_prefix_overflows():
    s = build_scenario(2, F(1, 2), [1, 1])
    with pytest.raises(InfeasibleTargetError):
        _solve_beta(s, {1, 2}, [F(0), F(0)])


def test_random_feasibility_and_dominance():
    rng = random.Random(11)
    for _ in range(1000):
        s = random_scenario(rng, 20)
        results = {f.__name__: f(s) for f in SOLVERS}
        for name, r in results.items():
            T, _ = delivery_time(s, r.q)
            assert T == r.achieved_time <= s.target_time, name
            assert list(r.q) == sorted(r.q) and all(0 < v <= 1 for v in r.q)
        sq, mm = results["sum_quality"].q, results["max_min"].q
        assert all(a >= b for a, b in zip(sq, mm))
        level = max_min_level(s)
        if level >= s.alpha[0]:
            assert sq[0] == min(level, 1)
        pfo = results["proportional_fairness"]
        assert pfo.beta >= 1
        assert pfo.binding or all(v == 1 for v in pfo.q)
