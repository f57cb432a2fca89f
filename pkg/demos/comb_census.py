# Connectivity of label configurations on the teeth of a comb of lines.
#
#    python3 demos/comb_census.py

import time

from hypercurves import comb

for e in range(2, 7):
    for k in range(2, 5):
        t = time.perf_counter()
        r = comb.connectivity(e, k)
        print("e=%d k=%d  configs=%5d  components=%3d  diameter=%s  %.2fs" % (
            e, k, r.config_count, r.component_count, r.diameter, time.perf_counter() - t))

# two labels: pair moves only swap, so the label counts never change
r = comb.connectivity(3, 2)
print()
print("e=3 k=2 sizes", r.component_sizes, r.label_count_notes)

# the reduced census works on orbits and lifts back to exact counts
t = time.perf_counter()
r = comb.symmetry_reduced_connectivity(6, 4)
print()
print("reduced e=6 k=4  orbits=%d  components=%d  %.2fs" % (r.orbit_count, r.component_count, time.perf_counter() - t))
