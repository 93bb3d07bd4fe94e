"""
Which linear systems are provably empty?
========================================

The classifier applies the square-case bound, the kappa refinement for
n = 10, 11, 12, and the two continued-fraction bounds, strongest first.
"""

from planeinterp import LinearSystem, classify, invariants
from planeinterp.linsys import TABLE_COLUMNS

# The six v = -1 systems settled by the refinement
rows = [(1499, 10, 474), (778, 10, 246), (428, 11, 129), (229, 11, 69), (215, 12, 62), (118, 12, 34)]
print(",".join(TABLE_COLUMNS))
for d, n, m in rows:
    print(",".join(invariants(LinearSystem(d, n, m)).table_row()))

# Every certificate that fires is listed in the witness
print(classify(LinearSystem(1499, 10, 474)).witness)

# With 3 | d the refinement is silent, and these stay open
for d, n, m in [(57, 10, 18), (2220, 10, 702), (627, 11, 189), (312, 12, 90)]:
    ls = LinearSystem(d, n, m)
    inv = invariants(ls)
    print(ls, classify(ls).status, "v =", inv.v, "kappa =", inv.kappa)
