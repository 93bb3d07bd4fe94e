"""
Slope bounds as palindromic continued fractions
===============================================

For non-square n = k^2 + alpha, powers of [[k, n], [1, k]] generate
rational approximations of sqrt(n) from below.  Two of them bound the
slope d/m of any curve through n general points of multiplicity m.
"""

import math

from planeinterp import bound_matrix, c1, c2, cf_expand, split_n
from planeinterp.bounds import cf_coefficients

# The split and the theorem hypotheses for ten points
s = split_n(10)
print(s)

# The scaled matrix powers; determinants alternate between -alpha and 1
for level in range(1, 5):
    m = bound_matrix(s, level)
    print(f"M{level}: p={m.p} q={m.q} r={m.r} det={m.det}")

# q2/p2 and q4/p4 are the same numbers as the continued fractions
print("c1(10) =", c1(10), "=", cf_expand(10, 1), "coefficients", [str(a) for a in cf_coefficients(10, 1)])
print("c2(10) =", c2(10), "=", cf_expand(10, 2), "coefficients", [str(a) for a in cf_coefficients(10, 2)])

# How close to sqrt(n) do the bounds get?
for n in (8, 10, 11, 12, 15, 18):
    gap = math.sqrt(n) - float(c2(n))
    print(f"n={n:2d}  c2={str(c2(n)):>9}  sqrt(n)-c2 = {gap:.2e}")
