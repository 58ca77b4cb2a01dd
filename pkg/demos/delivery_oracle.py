"""
Checking the load formula by brute force
========================================

Each multicast message is split into quality intervals, one per member that
needs more of it.  Adding the interval lengths on every sub-signal should
give the closed-form loads exactly, and every user should recover precisely
its own quality from the sub-signals it can decode.
"""

import random
import sys
from fractions import Fraction as F

from adaptcache import (
    assign_intervals,
    build_scenario,
    load_profile,
    measured_loads,
    render,
    verify_decoding,
)
from adaptcache.delivery import drop_interval, write_trace

s = build_scenario(4, F(1, 4), [1, 1, 1, 1])
Q = (F(1, 2), 1, 1, 1)
asg = assign_intervals(s, Q)
write_trace(asg, sys.stdout)
print("measured   ", [render(x) for x in measured_loads(asg)])
print("closed form", [render(x) for x in load_profile(s, Q).ell])

###############################################################################
# A broken assignment is caught and the missing piece is named.

report = verify_decoding(s, Q, drop_interval(asg, 2))
print(report.first_failure())

###############################################################################
# Random spot checks on bigger instances.

rng = random.Random(1)
bad = 0
for _ in range(200):
    K = rng.randint(2, 9)
    t = rng.randint(0, K - 1)
    s = build_scenario(K, F(t, K), [1] * K)
    Q = sorted(F(rng.randint(1, 16), 16) for _ in range(K))
    asg = assign_intervals(s, Q)
    if measured_loads(asg) != load_profile(s, Q).ell or not verify_decoding(s, Q, asg).ok:
        bad += 1
print("mismatches in 200 random instances:", bad)
