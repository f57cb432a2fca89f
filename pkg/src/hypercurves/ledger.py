"""Exact codimension bookkeeping for the loci of hypersurfaces that fail to be e-level.

Everything here is integer (or exact rational) arithmetic. The degree bound
involving a square root is decided by squaring under sign guards, never with
floats, because the interesting cases sit right at integer boundaries.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb


class HypothesisError(ValueError):
    """A formula was evaluated outside the range where it is established."""


def expected_fiber_dim(n, d, e):
    """Expected dimension e(n - d + 1) - 2 of degree-e curves through a point."""
    if d > n - 1 or e < 1:
        raise ValueError(f"need d <= n-1 and e >= 1, got n={n}, d={d}, e={e}")
    return e * (n - d + 1) - 2


def codim_S1(n):
    """Codimension C(n+1, 2) - 3(n - 2) of hypersurfaces that are not 1-level.

    Established only for 7 <= d = n - 1.
    """
    if n < 8:
        raise HypothesisError(f"codim_S1 requires 7 <= d = n-1 (n >= 8); got n={n}, d={n - 1}")
    return comb(n + 1, 2) - 3 * (n - 2)


@dataclass(frozen=True)
class ComparisonConstants:
    singular_line_codim: int
    ss_codim: int


def comparison_constants(n, d):
    """Hypersurfaces singular along a line (dn - 2n + 3) and the singular-point bound C(n+1, 2)."""
    return ComparisonConstants(singular_line_codim=d * n - 2 * n + 3, ss_codim=comb(n + 1, 2))


def step_bound(n, d, e):
    """Upper bound 2n - (n - d + 1)e on the codimension of S_{e-1} in S_e."""
    if e < 2:
        raise ValueError(f"step_bound needs e >= 2, got {e}")
    return 2 * n - (n - d + 1) * e


def residual(n, e):
    """(n^2 - n - 4ne + 2e^2 + 2e + 8) / 2 as an exact rational, d = n - 1."""
    if e < 2:
        raise ValueError(f"residual needs e >= 2, got {e}")
    return Fraction(n * n - n - 4 * n * e + 2 * e * e + 2 * e + 8, 2)


def residual_telescoped(n, e):
    """Same quantity computed as base codimension minus the summed step bounds."""
    base = comb(n + 1, 2) - 3 * (n - 2)
    return base - sum(step_bound(n, n - 1, k) for k in range(2, e + 1))


def pgl_dim_floor(n):
    """Curves that are not covers of a line move in a family of dimension >= 3n - 3."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return 3 * n - 3


def bendbreak_threshold(n):
    """Families of dimension >= 2n - 1 contain maps with reducible domains."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return 2 * n - 1


def layered_fiber_threshold(n, d, e):
    """Fiber dimension (n - 1) + (a - 1) used for the non-layered locus, a = expected fiber dim."""
    return (n - 1) + (expected_fiber_dim(n, d, e) - 1)


def layered_image_bound(n, d, e):
    """Image dimension bound 2n - 1 - (n + a - 2) for the non-layered locus."""
    return 2 * n - 1 - (n + expected_fiber_dim(n, d, e) - 2)


@dataclass(frozen=True)
class LedgerRow:
    e: int
    codim_lower_bound: int | None
    step_bound_applied: int | None
    provenance: str  # "S1-base" or "step-bound"

    @property
    def exhausted(self):
        return self.codim_lower_bound is not None and self.codim_lower_bound <= 0


@dataclass(frozen=True)
class CodimLedger:
    n: int
    d: int
    rows: tuple = field(default_factory=tuple)

    def row(self, e):
        return self.rows[e - 1]

    @property
    def last_positive_e(self):
        """Largest e whose lower bound is still positive (None if even e = 1 is not)."""
        best = None
        for r in self.rows:
            if r.codim_lower_bound is None or r.codim_lower_bound <= 0:
                break
            best = r.e
        return best


def build_ledger(n, d=None, emax=None):
    """Chain of codimension lower bounds for S_1, S_2, ..., S_emax.

    The base row is known only for 7 <= d = n - 1; for any other (n, d) the
    rows carry the step bounds with the bound itself left as None. Negative
    bounds are kept as they are.
    """
    d = n - 1 if d is None else d
    emax = n if emax is None else emax
    if not 2 <= d <= n - 1:
        raise ValueError(f"need 2 <= d <= n-1, got n={n}, d={d}")
    if emax < 1:
        raise ValueError("emax must be >= 1")
    base = codim_S1(n) if (d == n - 1 and n >= 8) else None
    rows = [LedgerRow(1, base, None, "S1-base")]
    current = base
    for e in range(2, emax + 1):
        s = step_bound(n, d, e)
        current = None if current is None else current - s
        rows.append(LedgerRow(e, current, s, "step-bound"))
    return CodimLedger(n=n, d=d, rows=tuple(rows))


def closed_form_holds(n, e, radicand=None):
    """Decide e < n - (1 + sqrt(R)) / 2 exactly, with R = n^2 - n - 15 by default.

    Equivalent to sqrt(R) < 2n - 1 - 2e, i.e. the right side positive and its
    square exceeding R. Returns None when R < 0 (the bound is not defined).
    """
    r = n * n - n - 15 if radicand is None else radicand
    if r < 0:
        return None
    rhs = 2 * n - 1 - 2 * e
    return rhs > 0 and rhs * rhs > r


def _largest_satisfying(n, radicand):
    # the predicate is monotone decreasing in e, and false once 2e >= 2n - 1
    best = None
    for e in range(1, n + 1):
        if closed_form_holds(n, e, radicand):
            best = e
        else:
            break
    return best


def max_e_scan(n):
    """Largest e in the run 2, 3, ... on which residual(n, e) > 0; None if residual(n, 2) <= 0.

    The quadratic opens upward and is positive again for large e; that tail is
    excluded by stopping at the first non-positive value.
    """
    best = None
    e = 2
    while residual(n, e) > 0:
        best = e
        e += 1
    return best


ILL_DEFINED = "ill-defined (negative radicand)"
CONIC_NOTE = "e <= 2 via conic argument (d < 7)"


@dataclass(frozen=True)
class BoundReport:
    n: int
    max_e_quadratic: int | None
    max_e_closed_form: object  # int, None, or ILL_DEFINED
    agreement: bool
    max_e_root_form: int | None
    special_case: str | None

    def as_record(self):
        return {
            "n": self.n,
            "max_e_quadratic": self.max_e_quadratic,
            "max_e_closed_form": self.max_e_closed_form,
            "max_e_root_form": self.max_e_root_form,
            "agreement": self.agreement,
            "special_case": self.special_case,
        }


def max_level_degree(n):
    """Compare the integer scan of the residual with the closed-form degree bound.

    ``max_e_root_form`` is the largest integer below the smaller root of the
    residual quadratic, n - (1 + sqrt(2n^2 - 2n - 15)) / 2; it is what the
    scan should reproduce. ``max_e_closed_form`` uses the radicand
    n^2 - n - 15 as the degree bound is stated.
    """
    if n < 4:
        raise ValueError(f"n >= 4 required, got {n}")
    scan = max_e_scan(n)
    radicand = n * n - n - 15
    closed = ILL_DEFINED if radicand < 0 else _largest_satisfying(n, radicand)
    root_rad = 2 * n * n - 2 * n - 15
    root_form = _largest_satisfying(n, root_rad) if root_rad >= 0 else None
    if root_form is not None and root_form < 2:
        root_form = None
    return BoundReport(
        n=n,
        max_e_quadratic=scan,
        max_e_closed_form=closed,
        agreement=(scan == closed),
        max_e_root_form=root_form,
        special_case=CONIC_NOTE if n <= 7 else None,
    )


def scan_consistent(report):
    """Re-substitute the scan answer: positive up to it, non-positive just past it."""
    n, m = report.n, report.max_e_quadratic
    if m is None:
        return residual(n, 2) <= 0
    return all(residual(n, e) > 0 for e in range(2, m + 1)) and residual(n, m + 1) <= 0


def closed_form_consistent(report):
    """Re-substitute the closed-form answer into its own inequality."""
    n, m = report.n, report.max_e_closed_form
    if m == ILL_DEFINED:
        return n * n - n - 15 < 0
    if m is None:
        return not closed_form_holds(n, 1)
    return closed_form_holds(n, m) and not closed_form_holds(n, m + 1)

