"""
Four allocations side by side
=============================

Twenty users with strengths rising evenly from 4/5 to 1, cache degree 3.
The greedy max-sum vector sits above the max-min one everywhere, and
proportional fairness never drops below the baseline.
"""

from fractions import Fraction as F

from adaptcache.sweeps import compare_methods, fig_scenario

s = fig_scenario(K=20, t=3)
_, rows = compare_methods(s)

table = {}
for method, pos, user, a, _, q, *_ in rows:
    table.setdefault(pos, {"alpha": F(a)})[method] = F(q)

methods = ("baseline", "proportional_fairness", "max_min", "sum_quality")
print("user  alpha  " + "  ".join(f"{m[:8]:>8}" for m in methods))
for pos in sorted(table):
    row = table[pos]
    print(f"{pos:4d}  {float(row['alpha']):.3f}  "
          + "  ".join(f"{float(row[m]):8.4f}" for m in methods))

for m in methods:
    print(f"{m:>22} total {float(sum(table[p][m] for p in table)):.4f}")
