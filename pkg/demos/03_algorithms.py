"""
Running the built-in algorithms
===============================

PageRank, PageRank-Entropy, label propagation and shortest paths on the
same hypergraph, partitioned four ways.
"""

from hyperps import (
    PageRankConfig,
    build,
    label_propagation,
    page_rank,
    page_rank_entropy,
    partition,
    shortest_paths,
)

h = build([[1, 2], [1, 2, 3, 4], [1, 4, 5], [3, 4], [6, 7]])
a = partition(h, "gvc", 4)

pr = page_rank(h, PageRankConfig(alpha=0.15, iterations=30), assignment=a, workers=2)
print("vertex ranks   ", {v: round(r, 4) for v, r in pr.vertex.items()})
print("hyperedge ranks", {e: round(r, 4) for e, r in pr.hyperedge.items()})

# Entropy near log2(cardinality) means the members have similar rank.
pre = page_rank_entropy(h, assignment=a)
print("entropy bits   ", {e: round(x, 4) for e, x in pre.hyperedge_extra.items()})

# Labels converge to the largest vertex id of each connected component.
lp = label_propagation(h, assignment=a)
print("labels         ", lp.vertex, "in", lp.report.rounds, "rounds")

# Hop counts: number of hyperedges crossed from vertex 5.
sp = shortest_paths(h, [5], assignment=a)
print("hops from 5    ", sp.vertex)

# Each run carries a report of the message traffic between partitions.
totals = sp.report.to_dict()["totals"]
print("sssp traffic   ", totals)
