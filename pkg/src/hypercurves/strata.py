"""Dimension audit for surjectivity of (A, L_3, ..., L_n) -> A G + sum L_i F_i.

The hyperplanes V of W_{2d-1} are stratified by secant rank on the rational
normal curve. Over each stratum the forms (G, F_3, ..., F_n) whose image lies
in V have a known codimension, and the margin ``fiber_codim - stratum_dim``
must stay >= 2 for the non-surjective locus to have codimension >= 2.
"""

from dataclasses import dataclass

from .hankel import formula_min_a1b1l

CASE_NAMES = ("S1(E)", "S2(E)\\S1(E)", "S3(E)\\S2(E)", "P(W_2d-1)*\\S3(E)")
STRATUM_DIMS = (1, 3, 5)
D3_NOTE = "d=3: S3(E) already fills P(W_5)*, so case 4 is empty; the n=4, d=3 instance is settled by cases 1-3 (min margin 2)"


class HypothesisError(ValueError):
    pass


def dim_W(a):
    """Dimension of the space of degree-a binary forms."""
    if a < 0:
        raise ValueError("a must be non-negative")
    return a + 1


def stratum_dims(d):
    """Dimensions used for S1, S2, S3 (upper bound 5 taken as exact) and the ambient P(W_{2d-1})*."""
    return STRATUM_DIMS + (dim_W(2 * d - 1) - 1,)


def secant_stratum_dim(ell, d):
    """Dimension min(2 ell - 1, 2d - 1) of the ell-secant variety of the curve in P^{2d-1}.

    ``ell >= 4`` means the open complement of S3, which has the ambient dimension.
    """
    if ell >= 4:
        return 2 * d - 1
    return min(2 * ell - 1, 2 * d - 1)


def fiber_codim(n, ell):
    """Codimension of the forms with image in V, for V of secant rank ell (4 means 'ell >= 4')."""
    if n < 4:
        raise HypothesisError(f"fiber_codim requires n >= 4, got {n}")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ell == 1:
        return n - 1
    if ell == 2:
        return 2 * (n - 1)
    if ell == 3:
        return 2 * (n - 1) + 1
    return 2 * (n - 1) + 2


def factor_codim_sum(n, d, ell):
    """Per-factor Hankel count: G in W_{2d-4} against W_3, and n - 2 forms F_i in W_{2d-2} against W_1."""
    g = formula_min_a1b1l(3, 2 * d - 4, ell) if 2 * d - 4 >= 0 else 0
    f = formula_min_a1b1l(1, 2 * d - 2, ell)
    return g + (n - 2) * f


def stratum_nonempty(ell, d):
    """Whether rank-ell hyperplanes exist in P(W_{2d-1})* (ell = 4 stands for the open complement of S3)."""
    return 2 * ell - 1 <= 2 * d - 1 if ell < 4 else 5 < 2 * d - 1


def _check_hypothesis(n, d):
    if n < 4:
        raise HypothesisError(f"requires n >= 4, got n={n}")
    if not d < n:
        raise HypothesisError(f"requires d < n, got n={n}, d={d}")
    if d < 2:
        raise HypothesisError(f"requires d >= 2, got d={d}")


def case_margins(n, d):
    """Margins n - 2, 2n - 5, 2n - 6, 2n - 2d + 1 for the four strata."""
    _check_hypothesis(n, d)
    return (n - 2, 2 * n - 5, 2 * n - 6, 2 * n - 2 * d + 1)


@dataclass(frozen=True)
class StrataCase:
    stratum_name: str
    stratum_dim: int
    fiber_codim: int
    margin: int
    nonempty: bool
    factor_sum: int
    refined_margin: int | None  # factor_sum minus the secant-variety dimension, on nonempty strata

    @property
    def factor_mismatch(self):
        return self.nonempty and self.factor_sum != self.fiber_codim


@dataclass(frozen=True)
class StrataAudit:
    n: int
    d: int
    cases: tuple

    @property
    def margins(self):
        return tuple(c.margin for c in self.cases)

    @property
    def verdict(self):
        return "pass" if all(m >= 2 for m in self.margins) else "fail"

    @property
    def min_margin(self):
        return min(self.margins)

    @property
    def tight_cases(self):
        """1-based case numbers attaining the minimum margin."""
        return tuple(i + 1 for i, m in enumerate(self.margins) if m == self.min_margin)

    @property
    def mismatches(self):
        """(n, d, ell) triples where the per-factor Hankel sum differs from the stated codimension."""
        return tuple((self.n, self.d, i + 1) for i, c in enumerate(self.cases) if c.factor_mismatch)

    @property
    def refined_verdict(self):
        ms = [c.refined_margin for c in self.cases if c.refined_margin is not None]
        return "pass" if all(m >= 2 for m in ms) else "fail"

    def as_record(self):
        return {
            "n": self.n,
            "d": self.d,
            "margins": list(self.margins),
            "verdict": self.verdict,
            "min_margin": self.min_margin,
            "tight_cases": list(self.tight_cases),
            "cases": [
                {
                    "stratum": c.stratum_name,
                    "stratum_dim": c.stratum_dim,
                    "fiber_codim": c.fiber_codim,
                    "margin": c.margin,
                    "nonempty": c.nonempty,
                    "factor_sum": c.factor_sum,
                    "refined_margin": c.refined_margin,
                }
                for c in self.cases
            ],
            "factor_mismatches": [list(t) for t in self.mismatches],
            "refined_verdict": self.refined_verdict,
            "note": D3_NOTE,
        }


def audit(n, d):
    margins = case_margins(n, d)
    dims = stratum_dims(d)
    cases = []
    for k in range(4):
        ell = k + 1
        fc = fiber_codim(n, ell)
        nonempty = stratum_nonempty(ell, d)
        fs = factor_codim_sum(n, d, ell)
        refined = fs - secant_stratum_dim(ell, d) if nonempty else None
        cases.append(StrataCase(CASE_NAMES[k], dims[k], fc, margins[k], nonempty, fs, refined))
        assert margins[k] == fc - dims[k], (n, d, ell)
    return StrataAudit(n, d, tuple(cases))


def sweep(n_max, n_min=4):
    return [audit(n, d) for n in range(n_min, n_max + 1) for d in range(2, n)]
