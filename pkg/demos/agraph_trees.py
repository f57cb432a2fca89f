# Stable A-graphs: expected dimensions, rooted-tree enumeration, and the
# chain -> comb specialization.
#
#    python3 demos/agraph_trees.py

from hypercurves import agraph
from hypercurves.agraph import AmbientContext

ctx = AmbientContext(n=8, d=7)

# a single vertex of degree e with no tail: the space of all degree-e curves
for e in range(1, 6):
    print("tau0 e=%d  dim=%d  (2e+n-4 = %d)" % (e, agraph.expected_dim(agraph.tau(0, e), ctx), 2 * e + ctx.n - 4))

# nondegenerate basic graphs are rooted trees of lines hanging off the marked point
print()
for e in range(1, 8):
    graphs = agraph.enumerate_nondegenerate_basic(e)
    print("e=%d  trees=%d" % (e, len(graphs)))
print("e=4 forms:", [agraph.canonical_form(g) for g in agraph.enumerate_nondegenerate_basic(4)])

# every tree of e lines has the same dimension, and each bubble costs one
g = agraph.from_canonical("(1(1(1))(1))")
print()
print(agraph.format_graph(g))
print("dim", agraph.expected_dim(g, ctx))
for h in agraph.bubbles_between(g)[:2]:
    print("bubble ->", agraph.canonical_form(h), "dim", agraph.expected_dim(h, ctx))

# chain of lines vs. comb of lines through the point
print()
for e in range(2, 7):
    ch = agraph.chain(e)
    cb = agraph.chain_to_comb(ch)
    print("e=%d  chain %d  comb %d" % (e, agraph.expected_dim(ch, ctx), agraph.expected_dim(cb, ctx)))

# validation reports problems instead of raising
bad = agraph.parse_graph("agraph\nvertex 0 beta=0\ntail 0 at 0\nend\n")
print()
print("invalid graph:", agraph.validate(bad))
