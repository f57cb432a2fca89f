# Codimension bookkeeping for hypersurfaces of degree d = n - 1, and the two
# ways of reading off the largest degree e that the bookkeeping covers.
#
#    python3 demos/ledger_bounds.py

from hypercurves import ledger

n = 10
led = ledger.build_ledger(n, emax=6)
print("n=%d  base codim C(n+1,2)-3(n-2) = %d" % (n, ledger.codim_S1(n)))
for row in led.rows:
    print("  e=%d  step=%s  lower bound=%s%s" % (
        row.e, row.step_bound_applied, row.codim_lower_bound, "  (exhausted)" if row.exhausted else ""))
print("last e with a positive bound:", led.last_positive_e)

# the telescoped sum and the closed quadratic agree exactly
for e in (2, 3, 4):
    print("residual(%d,%d) = %s = %s" % (n, e, ledger.residual(n, e), ledger.residual_telescoped(n, e)))

# integer scan of the quadratic vs. the square-root bound
print()
print("%4s %10s %12s %10s" % ("n", "scan", "closed form", "root form"))
for n in (4, 6, 8, 10, 15, 20, 30, 50):
    r = ledger.max_level_degree(n)
    print("%4d %10s %12s %10s" % (n, r.max_e_quadratic, r.max_e_closed_form, r.max_e_root_form))
