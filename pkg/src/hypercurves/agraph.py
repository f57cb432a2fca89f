"""Genus-0 stable A-graphs: validation, expected dimension, basic graphs, specializations.

A graph is a tree of vertices, each carrying a non-negative degree ``beta``,
joined by edges, with tails (marked points) hanging off vertices. Vertex and
tail ids are opaque integers; isomorphism ignores them.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

MAX_ENUM_DEGREE = 8


class InvalidGraphError(ValueError):
    pass


@dataclass(frozen=True)
class AmbientContext:
    """Hypersurface of degree ``d`` in P^n; requires 2 <= d <= n - 1."""

    n: int
    d: int

    def __post_init__(self):
        if not 2 <= self.d <= self.n - 1:
            raise ValueError(f"need 2 <= d <= n-1, got n={self.n}, d={self.d}")

    @property
    def dim_X(self):
        return self.n - 1


@dataclass(frozen=True)
class StableAGraph:
    vertices: tuple  # ((vertex_id, beta), ...)
    edges: tuple = ()  # ((u, v), ...)
    tails: tuple = ()  # ((tail_id, vertex_id), ...)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((int(v), int(b)) for v, b in self.vertices))
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        object.__setattr__(self, "tails", tuple((int(t), int(v)) for t, v in self.tails))

    @property
    def beta(self):
        return dict(self.vertices)

    @property
    def total_beta(self):
        return sum(b for _, b in self.vertices)

    def flags_at(self, v):
        """Number of flags (edge endpoints plus tails) incident to vertex ``v``."""
        k = sum((a == v) + (b == v) for a, b in self.edges)
        return k + sum(1 for _, w in self.tails if w == v)

    def adjacency(self):
        adj = defaultdict(list)
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __str__(self):
        return format_graph(self)


def tau(r, e):
    """One vertex of degree ``e`` with ``r`` tails (the graph of M_{0,r}(X, e))."""
    return StableAGraph(vertices=((0, e),), tails=tuple((t, 0) for t in range(r)))


def chain(e):
    """Path of ``e`` degree-1 vertices with the single tail on an end vertex."""
    return StableAGraph(
        vertices=tuple((i, 1) for i in range(e)),
        edges=tuple((i, i + 1) for i in range(e - 1)),
        tails=((0, 0),),
    )


def comb(e):
    """Degree-0 center carrying the tail, joined to ``e`` degree-1 teeth."""
    return StableAGraph(
        vertices=((0, 0),) + tuple((i, 1) for i in range(1, e + 1)),
        edges=tuple((0, i) for i in range(1, e + 1)),
        tails=((0, 0),),
    )


def validate(g):
    """Return the list of violated invariants; an empty list means the graph is valid."""
    problems = []
    ids = [v for v, _ in g.vertices]
    idset = set(ids)
    if not ids:
        return ["empty: no vertices"]
    if len(idset) != len(ids):
        problems.append("duplicate vertex id")
    for v, b in g.vertices:
        if b < 0:
            problems.append(f"degree: vertex {v} has negative beta {b}")
    for u, v in g.edges:
        if u not in idset or v not in idset:
            problems.append(f"edge ({u},{v}) references unknown vertex")
        if u == v:
            problems.append(f"self-loop at vertex {u}")
    tail_ids = [t for t, _ in g.tails]
    if len(set(tail_ids)) != len(tail_ids):
        problems.append("duplicate tail id")
    for t, v in g.tails:
        if v not in idset:
            problems.append(f"tail {t} attached to unknown vertex {v}")

    # a connected graph on V vertices is a tree iff it has V - 1 edges
    adj = g.adjacency()
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen and w in idset:
                seen.add(w)
                stack.append(w)
    if seen != idset:
        problems.append("not connected")
    if len(g.edges) != len(idset) - 1 or any(u == v for u, v in g.edges):
        problems.append("not a tree")

    for v, b in g.vertices:
        if b == 0:
            k = g.flags_at(v)
            if k < 3:
                problems.append(f"stability: beta-0 vertex {v} with {k} flag{'s' if k != 1 else ''}")
    if g.total_beta < 1:
        problems.append("degree: beta(tau) must be at least 1")
    return problems


def is_valid(g):
    return not validate(g)


def _require_valid(g):
    problems = validate(g)
    if problems:
        raise InvalidGraphError("; ".join(problems))


def flag_count(g):
    return 2 * len(g.edges) + len(g.tails)


def expected_dim(g, ctx):
    """(n + 1 - d) beta(tau) + #Tail - #Edge + dim X - 3."""
    _require_valid(g)
    return (ctx.n + 1 - ctx.d) * g.total_beta + len(g.tails) - len(g.edges) + ctx.dim_X - 3


def is_basic(g):
    _require_valid(g)
    return all(b in (0, 1) for _, b in g.vertices) and len(g.tails) == 1


def is_nondegenerate(g):
    return is_basic(g) and all(b == 1 for _, b in g.vertices)


def canonical_form(g):
    """Canonical string of a single-tail graph, rooted at the tail's vertex.

    Each vertex encodes as ``(beta child child ...)`` with children sorted, so
    two graphs are isomorphic exactly when their forms are equal.
    """
    if len(g.tails) != 1:
        raise InvalidGraphError("canonical form needs exactly one tail")
    adj = g.adjacency()
    beta = g.beta

    def enc(v, parent):
        kids = sorted(enc(w, v) for w in adj[v] if w != parent)
        return "(" + str(beta[v]) + "".join(kids) + ")"

    return enc(g.tails[0][1], None)


def from_canonical(form):
    """Rebuild a graph from :func:`canonical_form` output (vertex ids in preorder)."""
    vertices, edges = [], []
    stack = []
    i = 0
    while i < len(form):
        ch = form[i]
        if ch == "(":
            j = i + 1
            while form[j].isdigit():
                j += 1
            v = len(vertices)
            vertices.append((v, int(form[i + 1 : j])))
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
            i = j
        elif ch == ")":
            stack.pop()
            i += 1
        else:
            raise ValueError(f"bad canonical form at {i}: {form!r}")
    return StableAGraph(vertices=tuple(vertices), edges=tuple(edges), tails=((0, 0),))


@lru_cache(maxsize=None)
def _rooted_forms(size):
    """All canonical encodings of rooted trees with ``size`` degree-1 vertices."""
    out = set()
    # choose a multiset of subtrees with sizes summing to size - 1
    def build(remaining, max_form, acc):
        if remaining == 0:
            out.add("(1" + "".join(sorted(acc)) + ")")
            return
        for s in range(1, remaining + 1):
            for f in sorted(_rooted_forms(s)):
                # non-increasing order of subtree forms avoids repeats
                if max_form is not None and f > max_form:
                    continue
                build(remaining - s, f, acc + [f])

    build(size - 1, None, [])
    return frozenset(out)


def enumerate_nondegenerate_basic(e):
    """All nondegenerate basic graphs of total degree ``e`` up to isomorphism.

    These are rooted unlabeled trees on ``e`` degree-1 vertices, the root being
    the vertex that carries the tail. Sorted by canonical form.
    """
    if not 1 <= e <= MAX_ENUM_DEGREE:
        raise ValueError(f"e must lie in 1..{MAX_ENUM_DEGREE}, got {e}")
    return [from_canonical(f) for f in sorted(_rooted_forms(e))]


def is_chain(g):
    """Nondegenerate basic path with the tail on an end vertex."""
    if not is_valid(g) or not is_nondegenerate(g):
        return False
    adj = g.adjacency()
    if any(len(adj[v]) > 2 for v, _ in g.vertices):
        return False
    root = g.tails[0][1]
    return len(g.vertices) == 1 or len(adj[root]) == 1


def chain_to_comb(g):
    """Specialize a chain of ``e`` lines to the comb: a contracted center with the tail and ``e`` teeth."""
    if not is_chain(g):
        raise InvalidGraphError("input is not a nondegenerate basic chain with tail at an end")
    e = len(g.vertices)
    if e < 2:
        raise InvalidGraphError("a comb needs at least 2 teeth for its degree-0 center to be stable")
    return comb(e)


def bubble(g, v, edge_nbrs=(), tail_ids=()):
    """Insert a degree-0 vertex next to ``v`` and move the chosen flags of ``v`` onto it.

    This is one boundary specialization: one more edge, one more vertex, same
    total degree, so expected dimension drops by exactly one.
    """
    _require_valid(g)
    moved = len(edge_nbrs) + len(tail_ids)
    if moved < 2:
        raise InvalidGraphError("the new degree-0 vertex needs at least 2 moved flags to be stable")
    new = max(u for u, _ in g.vertices) + 1
    nbrs = set(edge_nbrs)
    edges = []
    for a, b in g.edges:
        if a == v and b in nbrs:
            edges.append((new, b))
        elif b == v and a in nbrs:
            edges.append((a, new))
        else:
            edges.append((a, b))
    edges.append((v, new))
    tails = tuple((t, new if (t in tail_ids and w == v) else w) for t, w in g.tails)
    out = StableAGraph(vertices=g.vertices + ((new, 0),), edges=tuple(edges), tails=tails)
    _require_valid(out)
    return out


def bubbles_between(g):
    """All single-step :func:`bubble` specializations of ``g`` that stay valid."""
    adj = g.adjacency()
    out = []
    for v, _ in g.vertices:
        flags = [("e", w) for w in adj[v]] + [("t", t) for t, w in g.tails if w == v]
        for k in range(2, len(flags) + 1):
            for chosen in combinations(flags, k):
                nb = tuple(x for kind, x in chosen if kind == "e")
                tl = tuple(x for kind, x in chosen if kind == "t")
                try:
                    out.append(bubble(g, v, nb, tl))
                except InvalidGraphError:
                    pass
    return out


def format_graph(g):
    """Structured-text record; :func:`parse_graph` inverts it exactly."""
    lines = ["agraph"]
    lines += [f"vertex {v} beta={b}" for v, b in g.vertices]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    lines += [f"tail {t} at {v}" for t, v in g.tails]
    lines.append("end")
    return "\n".join(lines)


def parse_graph(text):
    vertices, edges, tails = [], [], []
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0] != "agraph" or lines[-1] != "end":
        raise ValueError("graph record must start with 'agraph' and end with 'end'")
    for ln in lines[1:-1]:
        parts = ln.split()
        if parts[0] == "vertex" and len(parts) == 3 and parts[2].startswith("beta="):
            vertices.append((int(parts[1]), int(parts[2][5:])))
        elif parts[0] == "edge" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "tail" and len(parts) == 4 and parts[2] == "at":
            tails.append((int(parts[1]), int(parts[3])))
        else:
            raise ValueError(f"unrecognized graph record line: {ln!r}")
    return StableAGraph(vertices=tuple(vertices), edges=tuple(edges), tails=tuple(tails))
