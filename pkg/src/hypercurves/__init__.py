"""Exact checks of dimension counts and combinatorics for rational curves on degree n-1 hypersurfaces in P^n."""

from . import agraph, comb, hankel, ledger, linalg, strata

__all__ = ["agraph", "comb", "hankel", "ledger", "linalg", "strata"]
__version__ = "0.1.0"
