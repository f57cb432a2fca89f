"""Exact integer linear algebra: fraction-free rank and integer nullspace bases."""

from fractions import Fraction
from math import gcd


def _as_rows(m):
    return [[int(x) for x in row] for row in m]


def rank_exact(m):
    """Rank over Q of an integer matrix using Bareiss fraction-free elimination.

    Every intermediate entry stays an integer (each division is exact), so the
    result is deterministic and free of rounding.
    """
    a = _as_rows(m)
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * p - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = p
        r += 1
    return r


def rref(m):
    """Reduced row echelon form over Q; returns (rows as Fractions, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def primitive(v):
    """Scale a rational vector to a primitive integer vector (first nonzero entry positive)."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def nullspace_basis(m, ncols=None):
    """Integer basis of the right nullspace of ``m``.

    ``ncols`` is needed only when ``m`` has no rows.
    """
    if not m:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    a, pivots = rref(m)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in zip(a, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]
