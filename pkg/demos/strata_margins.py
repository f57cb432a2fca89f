# Margins between fiber codimension and stratum dimension in the
# surjectivity audit, over a range of (n, d).
#
#    python3 demos/strata_margins.py

import numpy as np

from hypercurves import strata

a = strata.audit(4, 3)
for c in a.cases:
    print("%-22s dim=%d  codim=%2d  margin=%d" % (c.stratum_name, c.stratum_dim, c.fiber_codim, c.margin))
print("verdict", a.verdict, "tight", a.tight_cases)

# minimum margin over the sweep, as an (n, d) table
N = 16
table = np.full((N + 1, N + 1), -1)
for au in strata.sweep(N):
    table[au.n, au.d] = au.min_margin
print()
print("min margin, rows n=4..%d, columns d=2..n-1" % N)
for n in range(4, N + 1):
    print("n=%2d " % n + " ".join("%2d" % table[n, d] for d in range(2, n)))

print()
print("smallest margin anywhere:", table[table >= 0].min())
print("factor-count mismatches:", sorted({t for au in strata.sweep(N) for t in au.mismatches})[:4], "...")
