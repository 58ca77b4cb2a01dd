"""
Six users, one cache each, mixed channels
=========================================

Six users each cache a third of the library (t = 2).  Their channel
strengths climb from 1/2 to 1.  We ask every method for the best qualities
that still finish inside the time an all-strong network would need.
"""

from fractions import Fraction as F

from adaptcache import build_scenario, allocate, load_profile, power_plan, render

alpha = [F(1, 2), F(5, 8), F(3, 4), F(7, 8), 1, 1]
s = build_scenario(6, F(1, 3), alpha)
print("target time", render(s.target_time))

# each method on its own line
for method in ("baseline", "proportional_fairness", "max_min", "sum_quality"):
    r = allocate(s, method)
    print(f"{method:>22}: " + "  ".join(render(q) for q in r.q),
          f"(time {render(r.achieved_time)})")

###############################################################################
# The greedy max-sum vector, layer by layer.  ``ell_n`` is the load carried
# by sub-signal ``n``; ``L_k`` the load seen by the ``k`` weakest users.

Q = allocate(s, "sum_quality").q
prof = load_profile(s, Q)
print()
print(" n   ell_n        L_n")
for n, (ell, L) in enumerate(zip(prof.ell, prof.L), 1):
    print(f"{n:2d}   {render(ell):<10}   {render(L)}")

###############################################################################
# Power exponents.  User 4 sets the pace, so its exponent equals its strength.

plan = power_plan(s, Q)
print()
print("bottleneck user", plan.bottleneck)
print("pi    ", [render(p) for p in plan.pi])
print("rates ", [render(R) for R in plan.rates])
print("times ", [render(x) for x in plan.sub_times])
