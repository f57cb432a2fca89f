from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercurves import agraph
from hypercurves.agraph import AmbientContext, StableAGraph


def brute_force_rooted_tree_count(e):
    """Count unlabeled rooted trees on e nodes by enumerating parent arrays.

    Every rooted tree has a labeling in which each parent precedes its child, so
    parent[i] < i covers all isomorphism classes. Canonical forms here are nested
    sorted tuples, independent of the string encoding used by the library.
    """
    if e == 1:
        return 1
    forms = set()
    for parents in product(*[range(i) for i in range(1, e)]):
        kids = {i: [] for i in range(e)}
        for child, p in enumerate(parents, start=1):
            kids[p].append(child)

        def enc(v):
            return tuple(sorted(enc(w) for w in kids[v]))

        forms.add(enc(0))
    return len(forms)


def euler_transform_counts(nmax):
    """Rooted tree counts from the standard recurrence a(n+1) = (1/n) sum_k (sum_{d|k} d a(d)) a(n-k+1)."""
    a = [0, 1]
    for n in range(1, nmax):
        s = 0
        for k in range(1, n + 1):
            dsum = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
            s += dsum * a[n - k + 1]
        a.append(s // n)
    return a[1 : nmax + 1]


def test_oracles_agree_with_each_other():
    assert [brute_force_rooted_tree_count(e) for e in range(1, 9)] == euler_transform_counts(8)


@pytest.mark.parametrize("e", range(1, 9))
def test_enumeration_count_matches_brute_force(e):
    assert len(agraph.enumerate_nondegenerate_basic(e)) == brute_force_rooted_tree_count(e)


@pytest.mark.parametrize("e, count", [(1, 1), (3, 2), (5, 9)])
def test_enumeration_examples(e, count):
    assert len(agraph.enumerate_nondegenerate_basic(e)) == count


@pytest.mark.parametrize("e", range(1, 8))
def test_enumeration_is_valid_and_pairwise_distinct(e):
    graphs = agraph.enumerate_nondegenerate_basic(e)
    forms = [agraph.canonical_form(g) for g in graphs]
    assert len(set(forms)) == len(forms)
    for g in graphs:
        assert agraph.validate(g) == []
        assert agraph.is_nondegenerate(g)
        assert g.total_beta == e


@pytest.mark.parametrize("e", [0, 9])
def test_enumeration_guard(e):
    with pytest.raises(ValueError):
        agraph.enumerate_nondegenerate_basic(e)


def test_validate_examples():
    assert agraph.validate(agraph.tau(1, 1)) == []
    problems = agraph.validate(StableAGraph(vertices=((0, 0),), tails=((0, 0),)))
    assert "stability: beta-0 vertex 0 with 1 flag" in problems
    cyc = StableAGraph(vertices=((0, 1), (1, 1)), edges=((0, 1), (0, 1)), tails=((0, 0),))
    assert "not a tree" in agraph.validate(cyc)


def test_validate_disconnected_and_unknown():
    g = StableAGraph(vertices=((0, 1), (1, 1), (2, 1)), edges=((0, 1), (0, 1)))
    problems = agraph.validate(g)
    assert "not connected" in problems
    g = StableAGraph(vertices=((0, 1),), tails=((0, 5),))
    assert any("unknown vertex" in p for p in agraph.validate(g))


@pytest.mark.parametrize(
    "g, n, d, expected",
    [
        (agraph.tau(0, 2), 5, 4, 5),
        (agraph.tau(1, 2), 5, 4, 6),
        (agraph.chain(3), 6, 5, 7),
        (agraph.comb(3), 6, 5, 6),
    ],
)
def test_expected_dim_examples(g, n, d, expected):
    assert agraph.expected_dim(g, AmbientContext(n, d)) == expected


def test_expected_dim_rejects_invalid():
    with pytest.raises(agraph.InvalidGraphError):
        agraph.expected_dim(StableAGraph(vertices=((0, 0),), tails=((0, 0),)), AmbientContext(5, 4))


def test_ambient_context_bounds():
    with pytest.raises(ValueError):
        AmbientContext(5, 5)
    with pytest.raises(ValueError):
        AmbientContext(5, 1)


@pytest.mark.parametrize("e", range(2, 21))
@pytest.mark.parametrize("n", range(4, 21))
def test_tau0_dimension(e, n):
    assert agraph.expected_dim(agraph.tau(0, e), AmbientContext(n, n - 1)) == 2 * e + n - 4


def test_flag_count_examples():
    g = StableAGraph(vertices=((0, 1), (1, 1), (2, 1), (3, 1)), edges=((0, 1), (1, 2), (2, 3)), tails=((0, 0),))
    assert agraph.flag_count(g) == 7
    assert agraph.flag_count(StableAGraph(vertices=((0, 1),))) == 0
    assert agraph.flag_count(agraph.comb(4)) == 9


def test_basic_predicates():
    assert agraph.is_basic(agraph.tau(1, 1)) and agraph.is_nondegenerate(agraph.tau(1, 1))
    c = agraph.comb(3)
    assert agraph.is_basic(c) and not agraph.is_nondegenerate(c)
    assert not agraph.is_basic(agraph.tau(1, 2))


@pytest.mark.parametrize("e, n, d, before, after", [(2, 6, 5, 6, 5), (3, 6, 5, 7, 6)])
def test_chain_to_comb_examples(e, n, d, before, after):
    ctx = AmbientContext(n, d)
    ch = agraph.chain(e)
    assert agraph.expected_dim(ch, ctx) == before
    assert agraph.expected_dim(agraph.chain_to_comb(ch), ctx) == after


def test_chain_to_comb_closed_forms():
    # chain: e + n - 2, comb: e + n - 3 when d = n - 1
    for n in range(4, 12):
        ctx = AmbientContext(n, n - 1)
        for e in range(2, 11):
            assert agraph.expected_dim(agraph.chain(e), ctx) == e + n - 2
            assert agraph.expected_dim(agraph.chain_to_comb(agraph.chain(e)), ctx) == e + n - 3


def test_chain_to_comb_rejects():
    with pytest.raises(agraph.InvalidGraphError):
        agraph.chain_to_comb(agraph.chain(1))
    with pytest.raises(agraph.InvalidGraphError):
        agraph.chain_to_comb(agraph.comb(3))
    star = agraph.from_canonical("(1(1)(1))")
    with pytest.raises(agraph.InvalidGraphError):
        agraph.chain_to_comb(star)


def test_chain_to_comb_accepts_relabelled_chain():
    g = StableAGraph(vertices=((7, 1), (3, 1), (5, 1)), edges=((5, 3), (3, 7)), tails=((9, 5),))
    assert agraph.canonical_form(agraph.chain_to_comb(g)) == agraph.canonical_form(agraph.comb(3))


@pytest.mark.parametrize("e", range(1, 7))
def test_every_bubble_drops_dim_by_one(e, ctx_8_7):
    for g in agraph.enumerate_nondegenerate_basic(e):
        base = agraph.expected_dim(g, ctx_8_7)
        for h in agraph.bubbles_between(g):
            assert agraph.expected_dim(h, ctx_8_7) == base - 1
            assert agraph.is_basic(h)


def test_chain_to_comb_drops_dim_by_one():
    ctx = AmbientContext(8, 7)
    for e in range(2, 8):
        drop = agraph.expected_dim(agraph.chain(e), ctx) - agraph.expected_dim(agraph.comb(e), ctx)
        assert drop == 1


@st.composite
def random_trees(draw):
    size = draw(st.integers(1, 9))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, size)]
    betas = [draw(st.integers(0, 3)) for _ in range(size)]
    ntails = draw(st.integers(0, 3))
    tails = [(t, draw(st.integers(0, size - 1))) for t in range(ntails)]
    return StableAGraph(
        vertices=tuple(enumerate(betas)),
        edges=tuple((p, i) for i, p in enumerate(parents, start=1)),
        tails=tuple(tails),
    )


@settings(max_examples=200, deadline=None)
@given(random_trees())
def test_flag_identity_on_random_trees(g):
    flags = sum(g.flags_at(v) for v, _ in g.vertices)
    assert agraph.flag_count(g) == flags == 2 * len(g.edges) + len(g.tails)


@settings(max_examples=200, deadline=None)
@given(random_trees())
def test_graph_record_round_trip(g):
    text = agraph.format_graph(g)
    assert agraph.parse_graph(text) == g
    assert agraph.format_graph(agraph.parse_graph(text)) == text


@settings(max_examples=100, deadline=None)
@given(random_trees(), st.randoms(use_true_random=False))
def test_canonical_form_ignores_ids(g, rnd):
    if len(g.tails) != 1:
        return
    ids = [v for v, _ in g.vertices]
    new_ids = rnd.sample(range(100), len(ids))
    ren = dict(zip(ids, new_ids))
    edges = [(ren[b], ren[a]) if rnd.random() < 0.5 else (ren[a], ren[b]) for a, b in g.edges]
    rnd.shuffle(edges)
    h = StableAGraph(
        vertices=tuple((ren[v], b) for v, b in reversed(g.vertices)),
        edges=tuple(edges),
        tails=((42, ren[g.tails[0][1]]),),
    )
    assert agraph.canonical_form(h) == agraph.canonical_form(g)
    assert agraph.canonical_form(agraph.from_canonical(agraph.canonical_form(g))) == agraph.canonical_form(g)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        agraph.parse_graph("agraph\nvertex x\nend")
    with pytest.raises(ValueError):
        agraph.parse_graph("vertex 0 beta=1")
