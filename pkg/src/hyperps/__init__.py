"""Vertex-and-hyperedge centric hypergraph processing on logical partitions."""
from .core import (
    BipartiteEdge,
    CliqueGraph,
    Hyperedge,
    Hypergraph,
    HypergraphError,
    NodeId,
    Side,
    UnknownNodeError,
    build,
    count_clique_edges,
    eid,
    vid,
)
from .partition import (
    Cut,
    PartitionAssignment,
    PartitionConfig,
    PartitionStats,
    greedy_cut,
    hybrid_cut,
    masters_and_mirrors,
    partition,
    partition_stats,
    random_cut,
)
from .engine import All, Context, EngineError, Program, RunReport, aggregate_messages, compute
from .algorithms import (
    PageRankConfig,
    entropy,
    label_propagation,
    page_rank,
    page_rank_entropy,
    shortest_paths,
)
from .formats import dump, load, loads
from .generate import describe, generate

__version__ = "0.1.0"
