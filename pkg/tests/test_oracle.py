import math
import random
import time
from fractions import Fraction as F
from itertools import combinations_with_replacement

import pytest

from adaptcache.allocation import max_min_level, sum_quality
from adaptcache.checks import random_scenario
from adaptcache.errors import DomainError, ScaleError
from adaptcache.model import build_scenario
from adaptcache.oracle import GridSpec, grid_best_min, grid_best_sum, grid_size
from adaptcache.timing import delivery_time


def naive(scenario, r):
    """Every monotone grid vector, checked with the general delivery time."""
    T = scenario.target_time
    feasible = [
        tuple(F(v, r) for v in g)
        for g in combinations_with_replacement(range(1, r + 1), scenario.K)
        if delivery_time(scenario, [F(v, r) for v in g])[0] <= T
    ]
    return max(sum(Q) for Q in feasible), max(min(Q) for Q in feasible)


@pytest.fixture
def pair():
    return build_scenario(2, F(1, 2), [F(1, 2), 1], F(1, 2))


def test_pair_sum(pair):
    assert grid_best_sum(pair, GridSpec(32, 2)) == ((F(1, 2), F(1)), F(3, 2))


def test_pair_min(pair):
    Q, low = grid_best_min(pair, GridSpec(32, 2))
    assert low == F(1, 2)


def test_single_user():
    for a in (F(1, 3), F(3, 4), F(1)):
        s = build_scenario(1, 0, [a], F(2, 3))
        Q, total = grid_best_sum(s, GridSpec(12, 1))
        exact = min(F(2, 3) * a, 1)
        assert total == F(math.floor(exact * 12), 12)


def test_undegraded_min():
    s = build_scenario(4, F(1, 4), [1] * 4)
    assert grid_best_min(s, GridSpec(16, 4))[1] == 1


def test_multirate_r64(multirate):
    start = time.perf_counter()
    Q, total = grid_best_sum(multirate, GridSpec(64, 6), budget=None)
    greedy = sum(sum_quality(multirate).q)
    assert total <= greedy <= total + F(6, 64)
    _, low = grid_best_min(multirate, GridSpec(64, 6), budget=None)
    assert F(25, 32) - F(1, 64) <= low <= F(25, 32)
    assert time.perf_counter() - start < 30


def test_budget_refusal(multirate):
    grid = GridSpec(64, 6)
    assert grid_size(grid) > 10**7
    with pytest.raises(ScaleError, match=str(grid_size(grid))):
        grid_best_sum(multirate, grid)


def test_resolution_and_dimension(pair):
    with pytest.raises(DomainError):
        GridSpec(1, 2)
    with pytest.raises(DomainError):
        grid_best_sum(pair, GridSpec(8, 3))


def test_against_naive_enumeration():
    rng = random.Random(9)
    for _ in range(40):
        s = random_scenario(rng, 3)
        r = 12
        best_sum, best_min = naive(s, r)
        assert grid_best_sum(s, GridSpec(r, s.K))[1] == best_sum
        assert grid_best_min(s, GridSpec(r, s.K))[1] == best_min


def test_greedy_beats_grid_tiny():
    rng = random.Random(10)
    for _ in range(60):
        s = random_scenario(rng, 3)
        grid = GridSpec(32, s.K)
        assert sum(sum_quality(s).q) >= grid_best_sum(s, grid)[1]
        assert min(max_min_level(s), 1) >= grid_best_min(s, grid)[1]
