"""Catalecticant (Hankel) matrices of functionals on binary forms.

A functional on W_{a+b} (degree a+b binary forms) is a coefficient vector
``c`` of length a+b+1. Its (a+1) x (b+1) Hankel matrix has entry c[i+j]; the
kernel is D(V), the forms f in W_b with A*f in the hyperplane V = ker(c) for
every A in W_a. Points of the rational normal curve are the evaluation
functionals c_k = s^(a+b-k) t^k.
"""

import random
from collections import Counter
from dataclasses import dataclass

from .linalg import nullspace_basis, rank_exact

SAMPLE_RANGE = 9


@dataclass(frozen=True)
class HankelInstance:
    a: int
    b: int
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a and b must be positive, got a={self.a}, b={self.b}")
        if len(self.c) != self.a + self.b + 1:
            raise ValueError(f"need {self.a + self.b + 1} coefficients, got {len(self.c)}")
        if not any(self.c):
            raise ValueError("c is identically zero, so it does not define a hyperplane")


@dataclass(frozen=True)
class SecantPoint:
    """A weighted sum of ``ell`` points [s:t] on the rational normal curve."""

    points: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((int(s), int(t)) for s, t in self.points))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.points:
            raise ValueError("need at least one point")
        if len(self.points) != len(self.weights):
            raise ValueError("points and weights differ in length")
        if any(w == 0 for w in self.weights):
            raise ValueError("weights must be nonzero")
        for s, t in self.points:
            if s == 0 and t == 0:
                raise ValueError("[0:0] is not a point of P^1")
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if projectively_equal(pts[i], pts[j]):
                    raise ValueError(f"points {pts[i]} and {pts[j]} coincide in P^1")

    @property
    def ell(self):
        return len(self.points)


def projectively_equal(p, q):
    return p[0] * q[1] - p[1] * q[0] == 0


def hankel_matrix(h):
    return [[h.c[i + j] for j in range(h.b + 1)] for i in range(h.a + 1)]


def rnc_functional(degree, s, t):
    """Evaluation at [s:t]: c_k = s^(degree-k) t^k."""
    if s == 0 and t == 0:
        raise ValueError("[0:0] is not a point of P^1")
    return tuple(s ** (degree - k) * t**k for k in range(degree + 1))


def secant_sample(a, b, sp):
    deg = a + b
    c = [0] * (deg + 1)
    for (s, t), w in zip(sp.points, sp.weights):
        for k, x in enumerate(rnc_functional(deg, s, t)):
            c[k] += w * x
    return HankelInstance(a, b, tuple(c))


def codim_DV(h):
    return rank_exact(hankel_matrix(h))


def DV_basis(h):
    """Integer basis of D(V), as coefficient vectors of forms in W_b."""
    return nullspace_basis(hankel_matrix(h))


def multiply_forms(f, g):
    """Product of binary forms given by coefficient vectors (coefficient of s^(deg-k) t^k at index k)."""
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return out


def pair(c, form):
    return sum(x * y for x, y in zip(c, form))


def kernel_recheck(h, basis=None):
    """True iff every basis form f satisfies c(A*f) = 0 for every monomial A in W_a.

    Independent of the matrix path: it multiplies polynomials directly.
    """
    basis = DV_basis(h) if basis is None else basis
    for f in basis:
        for i in range(h.a + 1):
            monomial = [int(k == i) for k in range(h.a + 1)]
            if pair(h.c, multiply_forms(monomial, f)) != 0:
                return False
    return True


def sample_secant_point(rng, ell, lo=-SAMPLE_RANGE, hi=SAMPLE_RANGE):
    """Distinct points and nonzero weights with integer entries in [lo, hi], by rejection."""
    points = []
    while len(points) < ell:
        p = (rng.randint(lo, hi), rng.randint(lo, hi))
        if p == (0, 0) or any(projectively_equal(p, q) for q in points):
            continue
        points.append(p)
    weights = []
    while len(weights) < ell:
        w = rng.randint(lo, hi)
        if w:
            weights.append(w)
    return SecantPoint(tuple(points), tuple(weights))


def formula_min_abl(a, b, ell):
    return min(a, b, ell)


def formula_min_a1b1l(a, b, ell):
    return min(a + 1, b + 1, ell)


@dataclass(frozen=True)
class LemmaReport:
    a: int
    b: int
    ell: int
    trials: int
    seed: int
    observed_codims: dict  # codim -> count
    kernel_recheck_ok: bool
    formula_min_abl: int
    formula_min_a1b1l: int
    counterexamples: tuple  # (c, observed codim) for trials off min(a+1, b+1, ell)

    @property
    def matches_min_abl(self):
        return set(self.observed_codims) == {self.formula_min_abl}

    @property
    def matches_min_a1b1l(self):
        return set(self.observed_codims) == {self.formula_min_a1b1l}

    @property
    def observed_law(self):
        if self.matches_min_abl and self.matches_min_a1b1l:
            return "both"
        if self.matches_min_a1b1l:
            return "min(a+1,b+1,ell)"
        if self.matches_min_abl:
            return "min(a,b,ell)"
        return "neither"

    @property
    def discrepancy(self):
        """The literal min(a, b, ell) fails, or some trial broke the saturation law."""
        return not self.matches_min_abl or bool(self.counterexamples) or not self.kernel_recheck_ok

    def as_record(self):
        return {
            "a": self.a,
            "b": self.b,
            "ell": self.ell,
            "trials": self.trials,
            "seed": self.seed,
            "observed_codims": {str(k): v for k, v in sorted(self.observed_codims.items())},
            "formula_min_abl": self.formula_min_abl,
            "formula_min_a1b1l": self.formula_min_a1b1l,
            "matches_min_abl": self.matches_min_abl,
            "matches_min_a1b1l": self.matches_min_a1b1l,
            "observed_law": self.observed_law,
            "kernel_recheck_ok": self.kernel_recheck_ok,
            "counterexamples": [list(c) + [r] for c, r in self.counterexamples],
            "discrepancy": self.discrepancy,
        }


def trial_seed(seed, a, b, ell):
    """Per-(a, b, ell) stream so trials do not depend on what else ran before."""
    return f"{seed}:{a}:{b}:{ell}"


def verify_lemma(a, b, ell, trials=100, seed=0):
    """Sample ``trials`` functionals on the ell-secant stratum and record codim D(V) for each."""
    if ell < 1 or trials < 1:
        raise ValueError("need ell >= 1 and trials >= 1")
    rng = random.Random(trial_seed(seed, a, b, ell))
    observed = Counter()
    recheck = True
    bad = []
    expect = formula_min_a1b1l(a, b, ell)
    for _ in range(trials):
        h = secant_sample(a, b, sample_secant_point(rng, ell))
        m = hankel_matrix(h)
        r = rank_exact(m)
        basis = nullspace_basis(m)
        if len(basis) != b + 1 - r or not kernel_recheck(h, basis):
            recheck = False
        observed[r] += 1
        if r != expect:
            bad.append((h.c, r))
    return LemmaReport(
        a=a,
        b=b,
        ell=ell,
        trials=trials,
        seed=seed,
        observed_codims=dict(observed),
        kernel_recheck_ok=recheck,
        formula_min_abl=formula_min_abl(a, b, ell),
        formula_min_a1b1l=expect,
        counterexamples=tuple(bad),
    )
