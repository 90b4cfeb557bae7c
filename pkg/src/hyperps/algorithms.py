"""PageRank, PageRank-Entropy, label propagation and shortest paths on the engine."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .combiners import add, concat, maximum, minimum, pair_sum
from .core import Hypergraph, Side, UnknownNodeError, build
from .engine import Context, Program, RunReport, compute
from .partition import PartitionAssignment, PartitionConfig, partition

log = logging.getLogger(__name__)

INF = math.inf


@dataclass(frozen=True)
class PageRankConfig:
    alpha: float = 0.15
    iterations: int = 30

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")


@dataclass
class Result:
    """Per-node values from one algorithm run."""

    vertex: dict[int, Any]
    hyperedge: dict[int, Any]
    report: RunReport
    hypergraph: Hypergraph
    # extra per-hyperedge values (entropy)
    hyperedge_extra: dict[int, Any] | None = None


def _drop_isolated(h: Hypergraph, assignment: PartitionAssignment | None):
    isolated = [v for v in h.vertices if h.degree(v) == 0]
    if not isolated:
        return h, assignment
    log.warning("excluding %d degree-0 vertex(es) from PageRank", len(isolated))
    h2 = h.without_isolated()
    if assignment is not None:
        # incidences are untouched; only the isolated nodes' placement goes away
        drop = set(isolated)
        masters = {n: p for n, p in assignment.masters.items()
                   if not (n.side == Side.VERTEX and n.raw in drop)}
        mirrors = {n: r for n, r in assignment.mirrors.items() if n in masters}
        assignment = PartitionAssignment(
            assignment.num_parts, assignment.edges, assignment.parts,
            masters, mirrors, assignment.strategy, assignment.log,
        )
    return h2, assignment


# -- PageRank ---------------------------------------------------------------

def _pr_vertex(alpha: float):
    def vertex(step, n, attr, msg, ctx: Context):
        total_weight, rank = msg
        data, _ = attr
        new_rank = alpha + (1.0 - alpha) * rank
        ctx.become((data, new_rank))
        ctx.broadcast(new_rank / total_weight)
    return vertex


def _pr_hyperedge(step, n, attr, msg, ctx: Context):
    (card, weight), _ = attr
    new_rank = msg * weight
    ctx.become(((card, weight), new_rank))
    ctx.broadcast((weight, new_rank / card))


def page_rank(
    h: Hypergraph,
    cfg: PageRankConfig = PageRankConfig(),
    *,
    assignment: PartitionAssignment | None = None,
    workers: int = 1,
    debug: bool = False,
) -> Result:
    """Unnormalized hypergraph PageRank for vertices and hyperedges.

    Vertex: ``rank = alpha + (1 - alpha) * sum_e(rank_e / |e|)``, then sends
    ``rank / total_weight`` to every incident hyperedge, where total_weight is
    the summed weight of its hyperedges.  Hyperedge: ``rank = weight * sum``
    of received values, then sends ``(weight, rank / |e|)`` to its members.
    Round 0 starts from the message ``(1.0, 1.0)``.  Degree-0 vertices are
    excluded with a warning.
    """
    h, assignment = _drop_isolated(h, assignment)
    start = h.with_attrs(
        {v: (a, 0.0) for v, a in h.vertices.items()},
        {e: ((he.cardinality, he.weight), 0.0) for e, he in h.hyperedges.items()},
    )
    vprog = Program(_pr_vertex(cfg.alpha), add)
    eprog = Program(_pr_hyperedge, pair_sum)
    out, report = compute(start, assignment, cfg.iterations, (1.0, 1.0), vprog, eprog, workers, debug)
    return Result(
        {v: a[1] for v, a in out.vertices.items()},
        {e: a[1] for e, a in out.hyperedge_attrs.items()},
        report,
        out,
    )


def clique_hypergraph(h: Hypergraph) -> Hypergraph:
    """Clique expansion as a hypergraph of two-member hyperedges.

    Each edge is weighted by the summed weight of the hyperedges the pair
    shares; hyperedge ids are clique-edge indices in ``(u, w)`` order.
    """
    g = h.to_clique_graph(lambda items: sum(w for _, w in items))
    return build([((u, w), wt) for (u, w), wt in g.edges.items()],
                 vertex_attrs={v: h.vertices[v] for v in g.vertices})


def clique_page_rank(
    h: Hypergraph,
    cfg: PageRankConfig = PageRankConfig(),
    *,
    strategy: str = "rvc",
    num_parts: int = 1,
    degree_cutoff: int = 100,
    workers: int = 1,
) -> Result:
    """PageRank on the clique expansion (see :func:`clique_hypergraph`).

    The two-member hyperedges just relay rank between their endpoints.
    """
    h2 = clique_hypergraph(h)
    a = partition(h2, strategy, PartitionConfig(num_parts, degree_cutoff))
    return page_rank(h2, cfg, assignment=a, workers=workers)


def entropy(ranks: Iterable[float]) -> float:
    """Shannon entropy in bits of ``ranks`` normalized to sum 1.

    Zero entries contribute nothing; an all-zero vector has entropy 0.
    """
    ranks = list(ranks)
    total = sum(ranks)
    if total <= 0.0:
        return 0.0
    h = 0.0
    for r in ranks:
        p = r / total
        if p > 0.0:
            # p * log(1/p), written so tiny p cannot overflow 1/p
            h -= p * math.log(p)
    return max(h, 0.0) / math.log(2)


def _pre_vertex(alpha: float):
    def vertex(step, n, attr, msg, ctx: Context):
        total_weight, rank = msg
        data, _ = attr
        new_rank = alpha + (1.0 - alpha) * rank
        ctx.become((data, new_rank))
        ctx.broadcast(((new_rank, total_weight),))
    return vertex


def _pre_hyperedge(step, n, attr, msg, ctx: Context):
    (card, weight), _, _ = attr
    # concatenation order depends on partitioning; sort before reducing
    pairs = sorted(msg)
    new_rank = math.fsum(rank * weight / total_weight for rank, total_weight in pairs)
    new_ent = entropy(rank for rank, _ in pairs)
    ctx.become(((card, weight), new_rank, new_ent))
    ctx.broadcast((weight, new_rank / card))


def page_rank_entropy(
    h: Hypergraph,
    cfg: PageRankConfig = PageRankConfig(),
    *,
    assignment: PartitionAssignment | None = None,
    workers: int = 1,
    debug: bool = False,
) -> Result:
    """PageRank variant whose hyperedges also record the entropy of member ranks.

    Vertices send ``(rank, total_weight)``; a hyperedge's rank is
    ``sum(rank * weight / total_weight)`` over its members.
    """
    h, assignment = _drop_isolated(h, assignment)
    start = h.with_attrs(
        {v: (a, 0.0) for v, a in h.vertices.items()},
        {e: ((he.cardinality, he.weight), 0.0, 0.0) for e, he in h.hyperedges.items()},
    )
    vprog = Program(_pre_vertex(cfg.alpha), concat)
    eprog = Program(_pre_hyperedge, pair_sum)
    out, report = compute(start, assignment, cfg.iterations, (1.0, 1.0), vprog, eprog, workers, debug)
    return Result(
        {v: a[1] for v, a in out.vertices.items()},
        {e: a[1] for e, a in out.hyperedge_attrs.items()},
        report,
        out,
        {e: a[2] for e, a in out.hyperedge_attrs.items()},
    )


# -- label propagation -------------------------------------------------------

def _lp_vertex(step, n, attr, msg, ctx: Context):
    data, label = attr
    new = n if step == 0 else maximum(label, msg)
    if step == 0 or new != label:
        ctx.become((data, new))
        ctx.broadcast(new)


def _lp_hyperedge(step, n, attr, msg, ctx: Context):
    data, label = attr
    new = msg if label is None else maximum(label, msg)
    if new != label:
        ctx.become((data, new))
        ctx.broadcast(new)


def label_propagation(
    h: Hypergraph,
    max_iters: int = 30,
    *,
    assignment: PartitionAssignment | None = None,
    workers: int = 1,
    debug: bool = False,
) -> Result:
    """Max-label propagation: every node ends with the largest vertex id it can reach.

    Vertices start with their own id; each node takes the max of what it
    receives.  Nodes only re-send after their label changed, so the run
    stops at the fixed point (or after ``max_iters`` rounds).
    """
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    start = h.with_attrs(
        {v: (a, None) for v, a in h.vertices.items()},
        {e: (a, None) for e, a in h.hyperedge_attrs.items()},
    )
    vprog = Program(_lp_vertex, maximum)
    eprog = Program(_lp_hyperedge, maximum)
    out, report = compute(start, assignment, max_iters, None, vprog, eprog, workers, debug)
    return Result(
        {v: a[1] for v, a in out.vertices.items()},
        {e: a[1] for e, a in out.hyperedge_attrs.items()},
        report,
        out,
    )


# -- shortest paths -----------------------------------------------------------

def _sp_vertex(sources: frozenset[int]):
    def vertex(step, n, attr, msg, ctx: Context):
        data, current = attr
        new = 0.0 if step == 0 and n in sources else msg
        if current > new:
            ctx.become((data, new))
            ctx.broadcast(new + 1.0)
    return vertex


def _sp_hyperedge(step, n, attr, msg, ctx: Context):
    data, current = attr
    if current > msg:
        ctx.become((data, msg))
        ctx.broadcast(msg)


def shortest_paths(
    h: Hypergraph,
    sources: Sequence[int] | set[int],
    max_iters: int | None = None,
    *,
    assignment: PartitionAssignment | None = None,
    workers: int = 1,
    debug: bool = False,
) -> Result:
    """Hop distances from a set of source vertices.

    A vertex's hop is the least number of hyperedges crossed to reach it from
    any source; a hyperedge's hop is one more than its closest member.
    Unreached nodes stay at ``inf``.  Only improved nodes are active, so the
    run ends by itself; ``max_iters=None`` allows as many rounds as there are
    hyperedges, which always suffices.
    """
    srcs = frozenset(sources)
    if not srcs:
        raise ValueError("at least one source vertex is required")
    for s in srcs:
        if s not in h.vertices:
            raise UnknownNodeError(f"unknown source vertex {s}")
    if max_iters is None:
        max_iters = h.num_hyperedges + 1
    start = h.with_attrs(
        {v: (a, INF) for v, a in h.vertices.items()},
        {e: (a, INF) for e, a in h.hyperedge_attrs.items()},
    )
    vprog = Program(_sp_vertex(srcs), minimum)
    eprog = Program(_sp_hyperedge, minimum)
    out, report = compute(start, assignment, max_iters, INF, vprog, eprog, workers, debug)
    return Result(
        {v: a[1] for v, a in out.vertices.items()},
        {e: a[1] for e, a in out.hyperedge_attrs.items()},
        report,
        out,
    )


ALGORITHMS = ("pagerank", "pagerank-entropy", "labelprop", "sssp")


def results_rows(result: Result) -> list[tuple[str, int, tuple]]:
    """``(kind, id, values)`` rows, vertices first, ids ascending."""
    rows = [("vertex", v, (x,)) for v, x in sorted(result.vertex.items())]
    extra = result.hyperedge_extra or {}
    for e, x in sorted(result.hyperedge.items()):
        rows.append(("hyperedge", e, (x, extra[e]) if e in extra else (x,)))
    return rows
