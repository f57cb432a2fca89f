# Hankel matrices of functionals on binary forms, sampled from secant
# varieties of the rational normal curve.
#
#    python3 demos/hankel_secant.py

import random

from hypercurves import hankel
from hypercurves.hankel import SecantPoint

# one point [1:2] in degree 3 gives a rank-one moment matrix
h = hankel.secant_sample(1, 2, SecantPoint(((1, 2),), (1,)))
print("c =", h.c)
for row in hankel.hankel_matrix(h):
    print("  ", row)
print("rank", hankel.codim_DV(h), "kernel", hankel.DV_basis(h), "recheck", hankel.kernel_recheck(h))

# rank grows with the number of points until the matrix is full
rng = random.Random(1)
a, b = 3, 4
print()
for ell in range(1, 7):
    sp = hankel.sample_secant_point(rng, ell)
    print("ell=%d  rank=%d  min(a+1,b+1,ell)=%d" % (
        ell, hankel.codim_DV(hankel.secant_sample(a, b, sp)), hankel.formula_min_a1b1l(a, b, ell)))

# the small case that separates min(a,b,ell) from min(a+1,b+1,ell)
r = hankel.verify_lemma(1, 2, 2, trials=50)
print()
print("a=1 b=2 ell=2 observed", r.observed_codims, "law:", r.observed_law)

# above saturation, weights can cancel onto a smaller secant variety
sp = SecantPoint(((1, 0), (0, 1), (1, 1)), (2, 2, -1))
h = hankel.secant_sample(1, 1, sp)
print("three points, c =", h.c, "rank", hankel.codim_DV(h))
