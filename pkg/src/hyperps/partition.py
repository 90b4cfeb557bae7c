"""Edge partitioning of the bipartite representation.

Every (vertex -> hyperedge) incidence is assigned to one of ``k`` logical
partitions.  Nodes are then replicated to every partition holding one of
their incidences; one replica per node is the master.

Seven strategies are available by short name::

    rvc   random vertex-cut      (hash of hyperedge)
    rhec  random hyperedge-cut   (hash of vertex)
    rbc   random both-cut        (hash of vertex * m_prime + hyperedge)
    hvc   hybrid vertex-cut      (big hyperedges are cut)
    hhec  hybrid hyperedge-cut   (high-degree vertices are cut)
    gvc   greedy vertex-cut
    ghec  greedy hyperedge-cut
"""
from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

import numpy as np

from .core import BipartiteEdge, Hypergraph, NodeId, Side, eid, vid

M_PRIME = 1125899906842597
_MASK = 2**64 - 1


class Cut(enum.Enum):
    VERTEX = "vertex"
    HYPEREDGE = "hyperedge"
    BOTH = "both"


@dataclass(frozen=True)
class PartitionConfig:
    num_parts: int
    degree_cutoff: int = 100
    m_prime: int = M_PRIME
    seed: int = 0

    def __post_init__(self):
        if self.num_parts < 1:
            raise ValueError(f"num_parts must be >= 1, got {self.num_parts}")
        if self.degree_cutoff < 1:
            raise ValueError(f"degree_cutoff must be positive, got {self.degree_cutoff}")
        if self.m_prime % 2 == 0:
            raise ValueError("m_prime must be odd")


def hash_part(raw: int, k: int, m_prime: int = M_PRIME) -> int:
    """``((raw * m_prime) mod 2**64) mod k``."""
    return ((raw * m_prime) & _MASK) % k


def hash_parts(ids: np.ndarray, k: int, m_prime: int = M_PRIME) -> np.ndarray:
    """Vectorized :func:`hash_part`; uint64 multiplication wraps modulo 2**64."""
    ids = np.asarray(ids, dtype=np.uint64)
    with np.errstate(over="ignore"):
        mixed = ids * np.uint64(m_prime)
    return (mixed % np.uint64(k)).astype(np.int64)


@dataclass
class PartitionAssignment:
    """Partition id per bipartite edge plus derived master/mirror placement.

    ``parts[i]`` belongs to ``edges[i]`` where ``edges`` follows
    :meth:`Hypergraph.bipartite_edges` order.
    """

    num_parts: int
    edges: list[BipartiteEdge]
    parts: np.ndarray
    masters: dict[NodeId, int]
    mirrors: dict[NodeId, frozenset[int]]
    strategy: str = ""
    # greedy strategies record (driven node raw id, chosen partition) per step
    log: list[tuple[int, int]] = field(default_factory=list, repr=False)

    @property
    def edge_part(self) -> dict[BipartiteEdge, int]:
        return dict(zip(self.edges, self.parts.tolist()))

    def replicas(self, node: NodeId) -> frozenset[int]:
        return self.mirrors.get(node, frozenset())

    def covers(self, h: Hypergraph) -> bool:
        return self.edges == h.bipartite_edges() and all(
            vid(v) in self.masters for v in h.vertices
        ) and all(eid(e) in self.masters for e in h.hyperedges)


@dataclass(frozen=True)
class PartitionStats:
    rf_vertex: float
    rf_hyperedge: float
    edge_balance: float
    per_partition_edges: list[int]

    def to_dict(self) -> dict[str, Any]:
        return {
            "rf_vertex": self.rf_vertex,
            "rf_hyperedge": self.rf_hyperedge,
            "edge_balance": self.edge_balance,
            "per_partition_edges": list(self.per_partition_edges),
        }


def masters_and_mirrors(
    edges: list[BipartiteEdge],
    parts: np.ndarray,
    h: Hypergraph | None = None,
    m_prime: int = M_PRIME,
    num_parts: int | None = None,
) -> tuple[dict[NodeId, int], dict[NodeId, frozenset[int]]]:
    """Derive replica sets and masters from an edge assignment.

    The master of a node is the partition holding most of its incident
    edges, lowest id on ties.  If ``h`` is given, its isolated nodes get
    master ``hash_part(id)`` and no mirrors (``num_parts`` is then required).
    """
    counts: dict[NodeId, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for (v, e), p in zip(edges, parts.tolist()):
        counts[vid(v)][p] += 1
        counts[eid(e)][p] += 1
    masters: dict[NodeId, int] = {}
    mirrors: dict[NodeId, frozenset[int]] = {}
    for node, per in counts.items():
        mirrors[node] = frozenset(per)
        masters[node] = min(per, key=lambda p: (-per[p], p))
    if h is not None:
        if num_parts is None:
            raise ValueError("num_parts is required to place isolated nodes")
        for v in h.vertices:
            if vid(v) not in masters:
                masters[vid(v)] = hash_part(v, num_parts, m_prime)
                mirrors[vid(v)] = frozenset()
    return masters, mirrors


def _assemble(h: Hypergraph, cfg: PartitionConfig, parts: np.ndarray, name: str,
              log: list[tuple[int, int]] | None = None) -> PartitionAssignment:
    edges = h.bipartite_edges()
    masters, mirrors = masters_and_mirrors(edges, parts, h, cfg.m_prime, cfg.num_parts)
    parts = np.ascontiguousarray(parts, dtype=np.int64)
    parts.flags.writeable = False
    return PartitionAssignment(cfg.num_parts, edges, parts, masters, mirrors, name, log or [])


def random_cut(h: Hypergraph, cfg: PartitionConfig, mode: Cut = Cut.VERTEX) -> PartitionAssignment:
    """Hash every edge by its hyperedge (VERTEX), its vertex (HYPEREDGE) or both."""
    src, dst = h.incidence_arrays()
    k = cfg.num_parts
    if mode is Cut.VERTEX:
        parts = hash_parts(dst, k, cfg.m_prime)
    elif mode is Cut.HYPEREDGE:
        parts = hash_parts(src, k, cfg.m_prime)
    else:
        # combined word src * m_prime + dst (mod 2**64); ``mod k`` reads the low
        # bits, so both ends must reach them
        with np.errstate(over="ignore"):
            word = src * np.uint64(cfg.m_prime) + dst
        parts = hash_parts(word, k, cfg.m_prime)
    name = {Cut.VERTEX: "rvc", Cut.HYPEREDGE: "rhec", Cut.BOTH: "rbc"}[mode]
    return _assemble(h, cfg, parts, name)


def hybrid_cut(h: Hypergraph, cfg: PartitionConfig, mode: Cut = Cut.VERTEX) -> PartitionAssignment:
    """Random cut that additionally cuts nodes whose size exceeds ``degree_cutoff``.

    VERTEX: edges of a hyperedge with cardinality > cutoff are hashed by
    vertex, all others by hyperedge.  HYPEREDGE is the mirror image using
    vertex degree.
    """
    if mode is Cut.BOTH:
        raise ValueError("hybrid cut supports VERTEX or HYPEREDGE mode")
    src, dst = h.incidence_arrays()
    k = cfg.num_parts
    by_src = hash_parts(src, k, cfg.m_prime)
    by_dst = hash_parts(dst, k, cfg.m_prime)
    if mode is Cut.VERTEX:
        size = np.array([he.cardinality for he in h.hyperedges.values()], dtype=np.int64)
        card = np.repeat(size, size)
        parts = np.where(card > cfg.degree_cutoff, by_src, by_dst)
        name = "hvc"
    else:
        deg = np.fromiter((h.degree(int(v)) for v in src), dtype=np.int64, count=len(src))
        parts = np.where(deg > cfg.degree_cutoff, by_dst, by_src)
        name = "hhec"
    return _assemble(h, cfg, parts, name)


def greedy_cut(h: Hypergraph, cfg: PartitionConfig, mode: Cut = Cut.VERTEX) -> PartitionAssignment:
    """Sequential greedy placement balancing overlap against load.

    VERTEX mode: each vertex gets a home partition by hash.  Hyperedges are
    visited in ascending id order; each goes whole to the partition ``p``
    maximizing ``overlap(e, p) - sqrt(load(p))`` where overlap counts members
    whose home or an existing replica is on ``p`` and load is the number of
    edges already placed on ``p``.  Ties go to the lowest ``p``.  HYPEREDGE
    mode swaps the roles of vertices and hyperedges.
    """
    if mode is Cut.BOTH:
        raise ValueError("greedy cut supports VERTEX or HYPEREDGE mode")
    k = cfg.num_parts
    if mode is Cut.VERTEX:
        driven = {e: h.members(e) for e in h.hyperedges}
        name = "gvc"
    else:
        driven = {v: h.incident(v) for v in h.vertices}
        name = "ghec"

    # replicas[x] holds the home partition plus partitions of placed edges
    replicas: dict[int, set[int]] = {}
    load = [0] * k
    choice: dict[int, int] = {}
    log: list[tuple[int, int]] = []
    for d in sorted(driven):
        others = driven[d]
        if not others:
            continue
        overlap = [0] * k
        for x in others:
            reps = replicas.get(x)
            if reps is None:
                reps = replicas[x] = {hash_part(x, k, cfg.m_prime)}
            for p in reps:
                overlap[p] += 1
        best, best_score = 0, overlap[0] - math.sqrt(load[0])
        for p in range(1, k):
            score = overlap[p] - math.sqrt(load[p])
            if score > best_score:
                best, best_score = p, score
        choice[d] = best
        load[best] += len(others)
        for x in others:
            replicas[x].add(best)
        log.append((d, best))

    src, dst = h.incidence_arrays()
    keys = dst if mode is Cut.VERTEX else src
    parts = np.fromiter((choice[int(x)] for x in keys), dtype=np.int64, count=len(keys))
    return _assemble(h, cfg, parts, name, log)


STRATEGIES: dict[str, Callable[[Hypergraph, PartitionConfig], PartitionAssignment]] = {
    "rvc": lambda h, cfg: random_cut(h, cfg, Cut.VERTEX),
    "rhec": lambda h, cfg: random_cut(h, cfg, Cut.HYPEREDGE),
    "rbc": lambda h, cfg: random_cut(h, cfg, Cut.BOTH),
    "hvc": lambda h, cfg: hybrid_cut(h, cfg, Cut.VERTEX),
    "hhec": lambda h, cfg: hybrid_cut(h, cfg, Cut.HYPEREDGE),
    "gvc": lambda h, cfg: greedy_cut(h, cfg, Cut.VERTEX),
    "ghec": lambda h, cfg: greedy_cut(h, cfg, Cut.HYPEREDGE),
}


def partition(h: Hypergraph, strategy: str, cfg: PartitionConfig | int) -> PartitionAssignment:
    """Run a strategy by short name (see module docstring)."""
    if isinstance(cfg, int):
        cfg = PartitionConfig(cfg)
    try:
        fn = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(
            f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}"
        ) from None
    return fn(h, cfg)


def partition_stats(assignment: PartitionAssignment, h: Hypergraph) -> PartitionStats:
    k = assignment.num_parts
    per = np.bincount(assignment.parts, minlength=k).astype(int).tolist()
    n_v, n_e = h.num_vertices, h.num_hyperedges
    rf_v = sum(len(assignment.replicas(vid(v))) for v in h.vertices) / n_v if n_v else 0.0
    rf_e = sum(len(assignment.replicas(eid(e))) for e in h.hyperedges) / n_e if n_e else 0.0
    total = sum(per)
    balance = max(per) / (total / k) if total else 1.0
    return PartitionStats(rf_v, rf_e, balance, per)


def replication_counts(assignment: PartitionAssignment, side: Side) -> Mapping[int, int]:
    """Replica count per node of one side."""
    return {n.raw: len(r) for n, r in assignment.mirrors.items() if n.side == side}
