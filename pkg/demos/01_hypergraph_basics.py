"""
Hypergraph basics
=================

Build a small hypergraph, query degrees and cardinalities, and look at
its two graph representations.
"""

# Four groups over five people.  Hyperedge ids follow input order: 0..3.
from hyperps import build, describe

h = build([[1, 2], [1, 2, 3, 4], [1, 4, 5], [3, 4]])
print(h)

# degree = number of groups a vertex belongs to, cardinality = group size
for v in h.vertices:
    print(f"vertex {v}: degree {h.degree(v)}, in hyperedges {h.incident(v)}")
for e, he in h.hyperedges.items():
    print(f"hyperedge {e}: members {he.members}, cardinality {he.cardinality}")

# The bipartite representation keeps one edge per membership, always vertex -> hyperedge.
edges = h.bipartite_edges()
print(len(edges), "bipartite edges, first three:", edges[:3])

# The clique expansion connects every pair of co-members.  The merge function
# receives (attribute, weight) of every hyperedge the pair shares; here we count them.
g = h.to_clique_graph(merge=len)
for (u, w), shared in g.edges.items():
    print(f"  {u} -- {w}  shared by {shared} hyperedge(s)")

# A Table-I style summary row
print(describe(h, clique=True))
