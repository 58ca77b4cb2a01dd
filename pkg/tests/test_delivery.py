import io
import random
from fractions import Fraction as F

import pytest

from adaptcache.checks import random_quality
from adaptcache.combinatorics import binom
from adaptcache.delivery import (
    Interval,
    assign_intervals,
    drop_interval,
    measured_loads,
    verify_decoding,
    write_trace,
)
from adaptcache.errors import ScaleError
from adaptcache.model import build_scenario
from adaptcache.timing import load_profile

from .conftest import L_SUM, Q_SUM


@pytest.fixture
def toy():
    return build_scenario(4, F(1, 4), [1] * 4)


TOY_Q = (F(1, 2), 1, 1, 1)


def _on(assignment, n):
    return [(sigma.subset, iv) for sigma, iv in assignment.signals[n - 1]]


def test_toy_intervals(toy):
    a = assign_intervals(toy, TOY_Q)
    half = Interval(F(0), F(1, 2))
    assert _on(a, 1) == [((1, 2), half), ((1, 3), half), ((1, 4), half)]
    assert _on(a, 2) == [
        ((1, 2), Interval(F(1, 2), F(1))),
        ((2, 3), Interval(F(0), F(1))),
        ((2, 4), Interval(F(0), F(1))),
    ]
    assert str(_on(a, 2)[0][1]) == "(1/2,1]"
    assert str(half) == "[0,1/2]"


def test_toy_loads(toy):
    a = assign_intervals(toy, TOY_Q)
    assert measured_loads(a) == (F(3, 2), F(5, 2), F(3, 2), F(1, 2))
    assert measured_loads(a) == load_profile(toy, TOY_Q).ell


def test_full_quality_single_interval():
    s = build_scenario(5, F(2, 5), [1] * 5)
    a = assign_intervals(s, [1] * 5)
    for n, sigma, iv in a.pairs():
        assert n == sigma.subset[0]
        assert iv == Interval(F(0), F(1))
    assert sum(measured_loads(a)) == binom(5, 3)


def test_multirate_loads(multirate):
    a = assign_intervals(multirate, Q_SUM)
    ell = measured_loads(a)
    assert ell == (F(125, 16), F(75, 16), F(5, 2), F(5, 2), F(457, 320), F(239, 320))
    running = F(0)
    for k, x in enumerate(ell):
        running += x
        assert running == L_SUM[k]


def test_multirate_decodes(multirate):
    report = verify_decoding(multirate, Q_SUM, assign_intervals(multirate, Q_SUM))
    assert report.ok
    assert report.passed == {k: True for k in range(1, 7)}
    assert report.first_failure() is None


def test_two_type_user_one(two_type):
    Q = (F(5, 6), F(5, 6), 1, 1, 1, 1)
    a = assign_intervals(two_type, Q)
    report = verify_decoding(two_type, Q, a)
    assert report.ok
    mine = {sig: ivs for (k, sig), ivs in report.coverage.items() if k == 1}
    assert len(mine) == 10
    for sig, ivs in mine.items():
        assert ivs == [Interval(F(0), F(5, 6))]
    # the degraded users' sub-signals alone carry [0, 5/6] of each of them
    low = {}
    for n, sigma, iv in a.pairs():
        if n <= 2 and 1 in sigma:
            low.setdefault(sigma.subset, []).append(iv)
    assert set(low) == set(mine)
    assert all(sum(iv.length for iv in ivs) == F(5, 6) for ivs in low.values())


def test_fault_injection(toy):
    a = drop_interval(assign_intervals(toy, TOY_Q), 2, index=0)
    report = verify_decoding(toy, TOY_Q, a)
    assert not report.ok
    k, msg = report.first_failure()
    assert k == 2
    assert msg == "user 2, message {1,2}: missing (1/2,1]"
    assert report.passed[1] and not report.passed[2]


def test_over_delivery_detected(toy):
    a = assign_intervals(toy, TOY_Q)
    a.signals[0][0] = (a.signals[0][0][0], Interval(F(0), F(3, 4)))
    report = verify_decoding(toy, TOY_Q, a)
    assert not report.passed[1]
    assert "over-delivery" in report.failures[1][0]


def test_trace_csv(toy):
    buf = io.StringIO()
    write_trace(assign_intervals(toy, TOY_Q), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "sub_signal,sigma,interval_lo,interval_hi"
    assert lines[1] == '1,"{1,2}",0,1/2'
    assert len(lines) == 1 + 9  # 6 messages, 3 of them split in two


def test_scale_refusal():
    s = build_scenario(100, F(1, 10), [1] * 100)
    with pytest.raises(ScaleError) as info:
        assign_intervals(s, [1] * 100)
    assert str(binom(100, 11)) in str(info.value)


def test_oracle_equivalence_small():
    rng = random.Random(5)
    for K in range(1, 8):
        for t in range(K):
            s = build_scenario(K, F(t, K), [1] * K)
            for _ in range(10):
                Q = random_quality(rng, K)
                a = assign_intervals(s, Q)
                assert measured_loads(a) == load_profile(s, Q).ell
                assert verify_decoding(s, Q, a).ok
