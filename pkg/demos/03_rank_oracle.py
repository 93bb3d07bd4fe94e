"""
Checking h0 by linear algebra over a prime field
================================================

The dimension of L(d, n, m) at random points is the corank of the matrix
of Hasse-derivative conditions.  Random points can only make h0 larger,
so h0 = 0 certifies emptiness and h0 = max(0, v + 1) certifies
non-speciality.
"""

import time

from planeinterp import LinearSystem, OracleConfig, certify
from planeinterp.oracle import BudgetExceeded

# The sharp systems: each has a unique curve
for dnm in [(3, 3, 2), (12, 6, 5), (48, 8, 17)]:
    start = time.perf_counter()
    cert = certify(LinearSystem(*dnm), OracleConfig(seed=1))
    print(f"L{dnm}: {cert.verdict} h0={cert.h0_observed} expected={cert.expected} "
          f"({time.perf_counter() - start:.1f}s)")

# The double line through two points: special, and the oracle notices at both primes
print(certify(LinearSystem(2, 2, 2)).verdict)

# A system shown empty by the refinement, confirmed independently
print(certify(LinearSystem(22, 10, 7)).verdict)

# Desk-scale only: the large table rows are refused up front
try:
    certify(LinearSystem(1499, 10, 474))
except BudgetExceeded as exc:
    print("refused:", exc)
