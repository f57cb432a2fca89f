"""Connectivity of line-label configurations on the teeth of a comb.

A configuration assigns one of ``k`` abstract lines to each of ``e`` teeth.
A move picks a strict subset S of teeth with |S| >= 2 whose current labels are
not all equal and relabels S arbitrarily, provided the new labels on S are
again not all equal. The all-equal configurations (multiple covers of one
line) are excluded; the question is whether the rest form one component.

Every move on S connects *all* configurations that agree off S and are
non-constant on S, so the move graph is a union of cliques. The raw census
unions those cliques directly; the reduced census works on orbits under
tooth permutations x label permutations and lifts back to exact raw counts.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations, product
from math import factorial

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components, shortest_path
from sympy.combinatorics import Permutation, PermutationGroup

E_RANGE = (2, 7)
K_RANGE = (2, 5)
MAX_CONFIGS = 10**6


class GuardError(ValueError):
    pass


class DegenerateConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CombConfig:
    labels: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if any(not 0 <= x < self.k for x in self.labels):
            raise ValueError(f"labels must lie in 0..{self.k - 1}")

    @property
    def e(self):
        return len(self.labels)

    @property
    def degenerate(self):
        return len(set(self.labels)) <= 1


def _strict_subsets(e):
    for size in range(2, e):
        yield from combinations(range(e), size)


def legal_moves(c):
    """Yield every configuration reachable from ``c`` in one move (each at most once)."""
    if c.degenerate:
        raise DegenerateConfigError("all teeth carry the same line; no moves are defined")
    seen = set()
    for S in _strict_subsets(c.e):
        current = [c.labels[i] for i in S]
        if len(set(current)) == 1:
            continue
        for repl in product(range(c.k), repeat=len(S)):
            if len(set(repl)) == 1 or list(repl) == current:
                continue
            new = list(c.labels)
            for i, x in zip(S, repl):
                new[i] = x
            new = tuple(new)
            if new not in seen:
                seen.add(new)
                yield CombConfig(new, c.k)


def _check_guard(e, k):
    if not E_RANGE[0] <= e <= E_RANGE[1]:
        raise GuardError(f"e must lie in {E_RANGE[0]}..{E_RANGE[1]}, got {e}")
    if not K_RANGE[0] <= k <= K_RANGE[1]:
        raise GuardError(f"k must lie in {K_RANGE[0]}..{K_RANGE[1]}, got {k}")
    if k**e > MAX_CONFIGS:
        raise GuardError(f"k^e = {k**e} exceeds {MAX_CONFIGS}")


@dataclass(frozen=True)
class ConnectivityReport:
    e: int
    k: int
    config_count: int
    component_count: int
    component_sizes: tuple
    diameter: int | None
    reduced: bool = False
    orbit_count: int | None = None
    orbit_component_count: int | None = None
    label_count_notes: dict = field(default_factory=dict)

    @property
    def connected(self):
        return self.component_count == 1

    def as_record(self):
        rec = {
            "e": self.e,
            "k": self.k,
            "reduced": self.reduced,
            "config_count": self.config_count,
            "connected": self.connected,
            "component_count": self.component_count,
            "component_sizes": list(self.component_sizes),
            "diameter": self.diameter,
        }
        if self.reduced:
            rec["orbit_count"] = self.orbit_count
            rec["orbit_component_count"] = self.orbit_component_count
        rec.update(self.label_count_notes)
        return rec


def _digits(e, k):
    idx = np.arange(k**e, dtype=np.int64)
    return np.stack([(idx // k**i) % k for i in range(e)], axis=1)


def to_index(labels, k):
    return sum(x * k**i for i, x in enumerate(labels))


def _move_bipartite(e, k, digits):
    """Edges config -> clique node, one clique per (S, labels off S)."""
    n = k**e
    powers = k ** np.arange(e, dtype=np.int64)
    idx = np.arange(n, dtype=np.int64)
    rows, cols = [], []
    offset = n
    for S in _strict_subsets(e):
        sub = digits[:, S]
        members = sub.min(axis=1) != sub.max(axis=1)
        key = idx - digits[:, S] @ powers[list(S)]
        _, clique = np.unique(key[members], return_inverse=True)
        rows.append(idx[members])
        cols.append(clique + offset)
        offset += int(clique.max()) + 1 if clique.size else 0
    rows = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
    cols = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
    return rows, cols, offset


def _label_counts(digits, k):
    return np.stack([(digits == x).sum(axis=1) for x in range(k)], axis=1)


def connectivity(e, k, with_diameter=True):
    """Exact component census of the move graph on non-degenerate configurations."""
    _check_guard(e, k)
    n = k**e
    digits = _digits(e, k)
    nondeg = digits.min(axis=1) != digits.max(axis=1)
    rows, cols, total = _move_bipartite(e, k, digits)
    # moves never touch an all-equal configuration
    assert nondeg[rows].all()
    adj = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(total, total)).tocsr()
    ncomp, lab = connected_components(adj, directed=False)
    config_lab = lab[:n][nondeg]
    sizes = np.bincount(np.unique(config_lab, return_inverse=True)[1])
    sizes = tuple(sorted((int(s) for s in sizes), reverse=True))

    diameter = None
    if with_diameter:
        reps = [to_index(r, k) for r, _ in orbit_representatives(e, k)]
        dist = shortest_path(adj, directed=False, unweighted=True, indices=reps)
        dist = dist[:, :n]
        finite = dist[np.isfinite(dist)]
        diameter = int(finite.max()) // 2 if finite.size else 0

    notes = {}
    if k == 2:
        notes = _k2_notes(e, digits, nondeg, lab[:n])
    return ConnectivityReport(
        e=e,
        k=k,
        config_count=int(nondeg.sum()),
        component_count=len(sizes),
        component_sizes=sizes,
        diameter=diameter,
        label_count_notes=notes,
    )


def pair_moves_preserve_counts(e, k=2):
    """Check by enumeration that every |S| = 2 move keeps the count of each label."""
    for labels in product(range(k), repeat=e):
        c = CombConfig(labels, k)
        if c.degenerate:
            continue
        for S in combinations(range(e), 2):
            if e == 2 or c.labels[S[0]] == c.labels[S[1]]:
                continue
            for repl in product(range(k), repeat=2):
                if repl[0] == repl[1]:
                    continue
                new = list(labels)
                new[S[0]], new[S[1]] = repl
                if Counter(new) != Counter(labels):
                    return False
    return True


def _k2_notes(e, digits, nondeg, lab):
    counts = _label_counts(digits, 2)[:, 0]
    per_comp = {}
    for c, l in zip(counts[nondeg], lab[nondeg]):
        per_comp.setdefault(int(l), set()).add(int(c))
    pure = all(len(v) == 1 for v in per_comp.values())
    return {
        "pair_moves_preserve_label_counts": pair_moves_preserve_counts(e, 2),
        "components_have_constant_label_counts": pure,
    }


# --- symmetry reduction -----------------------------------------------------
# A group element is (sigma, pi): tooth permutation and label permutation, acting
# by y[sigma[i]] = pi[x[i]]. Composition is componentwise.


def _compose(g, h):
    return tuple(g[0][i] for i in h[0]), tuple(g[1][i] for i in h[1])


def _inverse(g):
    s = [0] * len(g[0])
    for i, x in enumerate(g[0]):
        s[x] = i
    p = [0] * len(g[1])
    for i, x in enumerate(g[1]):
        p[x] = i
    return tuple(s), tuple(p)


def apply(g, labels):
    y = [0] * len(labels)
    for i, x in enumerate(labels):
        y[g[0][i]] = g[1][x]
    return tuple(y)


def _identity(e, k):
    return tuple(range(e)), tuple(range(k))


def _rep_from_sizes(sizes):
    out = []
    for j, s in enumerate(sizes):
        out += [j] * s
    return tuple(out)


def canonicalize(labels, k):
    """Return (rep, g) with ``apply(g, rep) == labels``; rep depends only on the orbit."""
    blocks = {}
    for i, x in enumerate(labels):
        blocks.setdefault(x, []).append(i)
    order = sorted(blocks.items(), key=lambda kv: (-len(kv[1]), kv[1][0]))
    rep = _rep_from_sizes([len(t) for _, t in order])
    sigma = [0] * len(labels)
    pos = 0
    for _, teeth in order:
        for t in teeth:
            sigma[pos] = t
            pos += 1
    used = [x for x, _ in order]
    pi = used + [x for x in range(k) if x not in blocks]
    return rep, (tuple(sigma), tuple(pi))


def _partitions(total, max_parts, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def orbit_representatives(e, k):
    """(rep, orbit size) for every orbit of non-degenerate configurations."""
    out = []
    for sizes in _partitions(e, k):
        if len(sizes) < 2:
            continue
        out.append((_rep_from_sizes(sizes), factorial(e) * factorial(k) // _stabilizer_order(sizes, k)))
    return out


def _stabilizer_order(sizes, k):
    order = factorial(k - len(sizes))
    for s in sizes:
        order *= factorial(s)
    for m in Counter(sizes).values():
        order *= factorial(m)
    return order


def _stabilizer_gens(rep, k):
    """Generators of the stabilizer of a canonical representative."""
    e = len(rep)
    ident = _identity(e, k)
    gens = []
    starts = [i for i in range(e) if i == 0 or rep[i] != rep[i - 1]]
    bounds = starts + [e]
    sizes = [bounds[j + 1] - bounds[j] for j in range(len(starts))]
    for j, st in enumerate(starts):
        for i in range(st, bounds[j + 1] - 1):
            s = list(range(e))
            s[i], s[i + 1] = s[i + 1], s[i]
            gens.append((tuple(s), ident[1]))
    for j in range(len(starts) - 1):
        if sizes[j] == sizes[j + 1]:
            s = list(range(e))
            a, b = starts[j], starts[j + 1]
            for t in range(sizes[j]):
                s[a + t], s[b + t] = b + t, a + t
            p = list(range(k))
            p[j], p[j + 1] = j + 1, j
            gens.append((tuple(s), tuple(p)))
    m = len(starts)
    for x in range(m, k - 1):
        p = list(range(k))
        p[x], p[x + 1] = x + 1, x
        gens.append((ident[0], tuple(p)))
    return gens


def _as_perm(g, e):
    return Permutation(list(g[0]) + [e + x for x in g[1]])


def _group_order(gens, e, k):
    if not gens:
        return 1
    group = None
    for g in gens:
        p = _as_perm(g, e)
        if p.is_Identity:
            continue
        if group is None:
            group = PermutationGroup([p])
        elif not group.contains(p):
            group = PermutationGroup(list(group.generators) + [p])
    return 1 if group is None else int(group.order())


def symmetry_reduced_connectivity(e, k):
    """Component census computed on orbits, lifted to exact raw component counts.

    Orbit-graph components are orbits of raw components. For each one, the
    stabilizer of a raw component is generated by the conjugated point
    stabilizers and the cycle voltages of the orbit graph; the number of raw
    components it contains is |G| / |stabilizer|.
    """
    _check_guard(e, k)
    reps = orbit_representatives(e, k)
    size_of = dict(reps)
    neighbours = {}
    for rep, _ in reps:
        nb = []
        for z in legal_moves(CombConfig(rep, k)):
            r2, h = canonicalize(z.labels, k)
            assert r2 in size_of, "a move reached a degenerate configuration"
            nb.append((r2, h))
        neighbours[rep] = nb

    group_order = factorial(e) * factorial(k)
    lift = {}
    sizes = []
    orbit_components = 0
    for root, _ in reps:
        if root in lift:
            continue
        orbit_components += 1
        lift[root] = _identity(e, k)
        members = [root]
        gens = []
        queue = deque([root])
        while queue:
            o = queue.popleft()
            g = lift[o]
            g_inv = _inverse(g)
            gens += [_compose(_compose(g, s), g_inv) for s in _stabilizer_gens(o, k)]
            for o2, h in neighbours[o]:
                gh = _compose(g, h)
                if o2 not in lift:
                    lift[o2] = gh
                    members.append(o2)
                    queue.append(o2)
                else:
                    gens.append(_compose(gh, _inverse(lift[o2])))
        copies = group_order // _group_order(set(gens), e, k)
        raw = sum(size_of[o] for o in members)
        assert raw % copies == 0
        sizes += [raw // copies] * copies

    return ConnectivityReport(
        e=e,
        k=k,
        config_count=sum(s for _, s in reps),
        component_count=len(sizes),
        component_sizes=tuple(sorted(sizes, reverse=True)),
        diameter=None,
        reduced=True,
        orbit_count=len(reps),
        orbit_component_count=orbit_components,
    )
