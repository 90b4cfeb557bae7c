"""
Comparing partitioning strategies
=================================

Partition one synthetic hypergraph with all seven strategies and compare
replication factors and edge balance.
"""

import time

from hyperps import generate, partition, partition_stats
from hyperps.partition import STRATEGIES, PartitionConfig

# A skewed hypergraph: a few hub vertices and some large hyperedges.
h = generate(5_000, 3_000, "powerlaw", min_cardinality=2, max_cardinality=200,
             exponent=1.5, vertex_skew=0.8, seed=1)
print(h, "max degree", h.max_degree(), "max cardinality", h.max_cardinality())

cfg = PartitionConfig(num_parts=8, degree_cutoff=50)
print(f"{'strategy':8} {'rf_vertex':>9} {'rf_hyper':>9} {'balance':>8} {'seconds':>8}")
for name in STRATEGIES:
    t0 = time.perf_counter()
    a = partition(h, name, cfg)
    dt = time.perf_counter() - t0
    s = partition_stats(a, h)
    print(f"{name:8} {s.rf_vertex:9.3f} {s.rf_hyperedge:9.3f} {s.edge_balance:8.3f} {dt:8.3f}")

# Vertex-cut strategies keep every hyperedge whole (rf_hyperedge == 1) and
# replicate vertices instead; hyperedge-cut strategies do the opposite.
