"""
How good can the weak users get?
================================

A hundred users, ten of them on a weak channel of strength ``alpha``.  Every
user caches a tenth of the library.  Without quality adaptation the weak
users get quality ``alpha``; here is what they can get instead while the
delivery still finishes in the all-strong time.
"""

from fractions import Fraction as F

from adaptcache import two_type_max_quality
from adaptcache.sweeps import boost_vs_w

K, t, w = 100, 10, 10

print(" alpha   best quality   boost")
for i in range(1, 11):
    a = F(i, 10)
    q = two_type_max_quality(K, t, a, w)
    print(f"{float(a):6.2f}   {float(q):12.4f}   {float(q / a):5.3f}")

###############################################################################
# The boost shrinks as more users are weak, and also as caches grow.

_, rows = boost_vs_w(K, F(3, 5), cache_degrees=(1, 10, 20), ws=(1, 5, 10, 50, 100))
print()
print("  t    w   boost")
for row in rows:
    print(f"{row[0]:3d}  {row[3]:3d}   {float(F(row[6])):.3f}")
