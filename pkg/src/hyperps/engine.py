"""Alternating vertex/hyperedge bulk-synchronous execution.

A round is a vertex phase followed by a hyperedge phase.  In each phase the
active nodes of one side run their program at their master partition; the
resulting attribute and emissions are shipped to every mirror, each
partition turns emissions into per-edge messages along its local edges,
pre-combines them per destination, and ships the partial results to the
destination's master where they are combined again.  A node is active in a
phase iff it received at least one message; in round 0 every vertex is
active and receives ``initial_msg``.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from .combiners import Combiner, default_combiner
from .core import Hypergraph, NodeId, Side, eid, vid
from .partition import PartitionAssignment, PartitionConfig, random_cut


class EngineError(RuntimeError):
    pass


class _AllType:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "All"


All = _AllType()
_MISSING = object()
_CONST = 0
_FUNC = 1


class Context:
    """Handle passed to a procedure for updating state and emitting messages."""

    __slots__ = ("node", "_neighbors", "attr", "changed", "sends")

    def __init__(self, node: NodeId, neighbors: tuple[int, ...], attr: Any):
        self.node = node
        self._neighbors = neighbors
        self.attr = attr
        self.changed = False
        self.sends: list[tuple[int, Any, frozenset | None]] = []

    def become(self, attr: Any) -> None:
        self.attr = attr
        self.changed = True

    def send(self, msg_f: Callable[[int], Any], to: Iterable[int] | _AllType = All) -> None:
        """Send ``msg_f(neighbor)`` to each neighbor in ``to``."""
        if to is All:
            self.sends.append((_FUNC, msg_f, None))
            return
        targets = frozenset(to)
        bad = targets.difference(self._neighbors)
        if bad:
            other = "hyperedge" if self.node.side == Side.VERTEX else "vertex"
            raise EngineError(
                f"{self.node!r} cannot send to {other} {min(bad)}: not incident"
            )
        self.sends.append((_FUNC, msg_f, targets))

    def broadcast(self, msg: Any) -> None:
        self.sends.append((_CONST, msg, None))


Procedure = Callable[[int, int, Any, Any, Context], None]


@dataclass(frozen=True)
class Program:
    """A procedure plus the combiner for the messages it *emits*.

    If ``combiner`` is omitted it is looked up from ``message_type`` (see
    :func:`hyperps.combiners.default_combiner`).
    """

    procedure: Procedure
    combiner: Combiner | None = None
    message_type: Any = None

    def __post_init__(self):
        if self.combiner is None:
            if self.message_type is None:
                raise EngineError("program needs a combiner or a message_type")
            object.__setattr__(self, "combiner", default_combiner(self.message_type))


@dataclass
class PhaseRecord:
    round: int
    phase: str
    wall_seconds: float
    active: int
    emitted: int
    combined: int
    shipped: int
    synced: int


@dataclass
class RunReport:
    phases: list[PhaseRecord] = field(default_factory=list)
    rounds: int = 0
    execution_seconds: float = 0.0
    config: dict[str, Any] = field(default_factory=dict)
    partition_seconds: float | None = None
    partition_stats: dict[str, Any] | None = None
    result_paths: list[str] = field(default_factory=list)

    @property
    def total_shipped(self) -> int:
        return sum(p.shipped for p in self.phases)

    @property
    def total_synced(self) -> int:
        return sum(p.synced for p in self.phases)

    @property
    def total_emitted(self) -> int:
        return sum(p.emitted for p in self.phases)

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config,
            "partition_seconds": self.partition_seconds,
            "partition_stats": self.partition_stats,
            "execution_seconds": self.execution_seconds,
            "rounds": self.rounds,
            "phases": [asdict(p) for p in self.phases],
            "totals": {
                "emitted": self.total_emitted,
                "combined": sum(p.combined for p in self.phases),
                "shipped": self.total_shipped,
                "synced": self.total_synced,
                "cross_partition_volume": self.total_shipped + self.total_synced,
            },
            "result_paths": list(self.result_paths),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def aggregate_messages(
    partials: Sequence[Mapping[Any, Any]],
    combiner: Combiner,
    master_of: Mapping[Any, int] | None = None,
) -> tuple[dict[Any, Any], int]:
    """Combine per-partition pre-combined messages into one per destination.

    ``partials[q]`` maps destination to the message pre-combined on
    partition ``q``.  Returns the combined messages and the number of
    ``(partition, destination)`` pairs that had to cross partitions, i.e.
    where ``q`` is not the destination's master.  Without ``master_of``
    every pair counts as shipped.

    >>> aggregate_messages([{"x": 3}, {"x": 9}], max, {"x": 0})
    ({'x': 9}, 1)
    """
    out: dict[Any, Any] = {}
    shipped = 0
    for q, part in enumerate(partials):
        for dest, msg in part.items():
            prev = out.get(dest, _MISSING)
            out[dest] = msg if prev is _MISSING else combiner(prev, msg)
            if master_of is None or master_of[dest] != q:
                shipped += 1
    return out, shipped


def precombine(messages: Iterable[tuple[Any, Any]], combiner: Combiner) -> dict[Any, Any]:
    """Combine ``(destination, message)`` pairs locally, one result per destination."""
    out: dict[Any, Any] = {}
    for dest, msg in messages:
        prev = out.get(dest, _MISSING)
        out[dest] = msg if prev is _MISSING else combiner(prev, msg)
    return out


class _SideLayout:
    """Per-side placement: masters, local adjacency and replica attributes per partition."""

    def __init__(self, side: Side, k: int, h: Hypergraph, a: PartitionAssignment):
        self.side = side
        ids = list(h.vertices) if side == Side.VERTEX else list(h.hyperedges)
        attrs = h.vertices if side == Side.VERTEX else h.hyperedge_attrs
        tag = vid if side == Side.VERTEX else eid
        self.masters: list[list[int]] = [[] for _ in range(k)]
        self.master_of: dict[int, int] = {}
        self.replicas: dict[int, tuple[int, ...]] = {}
        self.attrs: list[dict[int, Any]] = [{} for _ in range(k)]
        for n in ids:
            node = tag(n)
            m = a.masters[node]
            self.master_of[n] = m
            self.masters[m].append(n)
            reps = tuple(sorted(a.mirrors.get(node) or (m,)))
            self.replicas[n] = reps
            for q in reps:
                self.attrs[q][n] = attrs[n]
        self.local_adj: list[dict[int, list[int]]] = [{} for _ in range(k)]
        for (v, e), p in zip(a.edges, a.parts.tolist()):
            if side == Side.VERTEX:
                self.local_adj[p].setdefault(v, []).append(e)
            else:
                self.local_adj[p].setdefault(e, []).append(v)


class _Runner:
    def __init__(self, h, assignment, v_program, he_program, workers, debug):
        self.h = h
        self.k = k = assignment.num_parts
        self.layout = {
            Side.VERTEX: _SideLayout(Side.VERTEX, k, h, assignment),
            Side.HYPEREDGE: _SideLayout(Side.HYPEREDGE, k, h, assignment),
        }
        self.programs = {Side.VERTEX: v_program, Side.HYPEREDGE: he_program}
        self.debug = debug
        self.pool = ThreadPoolExecutor(workers) if workers > 1 else None

    def _map(self, fn, items):
        if self.pool is None:
            return [fn(x) for x in items]
        return list(self.pool.map(fn, items))

    def phase(self, side: Side, step: int, inbox: list[dict[int, Any]] | None,
              initial_msg: Any) -> tuple[list[dict[int, Any]], PhaseRecord]:
        t0 = time.perf_counter()
        lay = self.layout[side]
        other = self.layout[Side.VERTEX if side == Side.HYPEREDGE else Side.HYPEREDGE]
        program = self.programs[side]
        proc = program.procedure
        combine = program.combiner
        k = self.k
        tag = vid if side == Side.VERTEX else eid
        neighbors = self.h.incident if side == Side.VERTEX else self.h.members

        # 1. run programs at masters, queue results for every replica
        def run_masters(p: int):
            box: list[list] = [[] for _ in range(k)]
            attrs = lay.attrs[p]
            local_in = None if inbox is None else inbox[p]
            active = 0
            for n in lay.masters[p]:
                if local_in is None:
                    msg = initial_msg
                else:
                    msg = local_in.get(n, _MISSING)
                    if msg is _MISSING:
                        continue
                active += 1
                ctx = Context(tag(n), neighbors(n), attrs[n])
                proc(step, n, attrs[n], msg, ctx)
                if ctx.changed or ctx.sends:
                    rec = (n, ctx.changed, ctx.attr, ctx.sends)
                    for q in lay.replicas[n]:
                        box[q].append(rec)
            return active, box

        ran = self._map(run_masters, range(k))

        # 2. apply replica updates, expand emissions along local edges, pre-combine
        def scatter(q: int):
            attrs = lay.attrs[q]
            adj = lay.local_adj[q]
            local: dict[int, Any] = {}
            emitted = synced = 0
            for p in range(k):
                for n, changed, attr, sends in ran[p][1][q]:
                    if p != q:
                        synced += 1
                    if changed:
                        attrs[n] = attr
                    if not sends:
                        continue
                    for m in adj.get(n, ()):
                        for kind, payload, targets in sends:
                            if targets is not None and m not in targets:
                                continue
                            msg = payload if kind == _CONST else payload(m)
                            emitted += 1
                            prev = local.get(m, _MISSING)
                            local[m] = msg if prev is _MISSING else combine(prev, msg)
            out: list[dict[int, Any]] = [{} for _ in range(k)]
            master_of = other.master_of
            for m, msg in local.items():
                out[master_of[m]][m] = msg
            return emitted, synced, out

        scattered = self._map(scatter, range(k))

        # 3. final combine at the destination's master
        def gather(r: int):
            return aggregate_messages([scattered[q][2][r] for q in range(k)], combine)

        gathered = self._map(gather, range(k))
        next_inbox = [g[0] for g in gathered]
        shipped = sum(len(scattered[q][2][r]) for q in range(k) for r in range(k) if q != r)

        if self.debug:
            self.check_mirrors(side)
        rec = PhaseRecord(
            round=step,
            phase=side.name.lower(),
            wall_seconds=time.perf_counter() - t0,
            active=sum(a for a, _ in ran),
            emitted=sum(s[0] for s in scattered),
            combined=sum(len(b) for b in next_inbox),
            shipped=shipped,
            synced=sum(s[1] for s in scattered),
        )
        return next_inbox, rec

    def check_mirrors(self, side: Side) -> None:
        lay = self.layout[side]
        for n, reps in lay.replicas.items():
            ref = lay.attrs[lay.master_of[n]][n]
            for q in reps:
                val = lay.attrs[q][n]
                if val is not ref and val != ref:
                    raise EngineError(
                        f"mirror of {side.name.lower()} {n} on partition {q} is stale"
                    )

    def final_attrs(self, side: Side) -> dict[int, Any]:
        lay = self.layout[side]
        return {n: lay.attrs[m][n] for n, m in lay.master_of.items()}

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()


def compute(
    h: Hypergraph,
    assignment: PartitionAssignment | None,
    max_iters: int,
    initial_msg: Any,
    v_program: Program,
    he_program: Program,
    workers: int = 1,
    debug: bool = False,
) -> tuple[Hypergraph, RunReport]:
    """Run the vertex and hyperedge programs for up to ``max_iters`` rounds.

    Stops early once a phase emits no messages.  Returns a hypergraph with the
    final attributes (topology shared with ``h``) and a :class:`RunReport`.
    ``assignment=None`` runs everything on a single partition.
    """
    if max_iters < 0:
        raise ValueError("max_iters must be >= 0")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if assignment is None:
        assignment = random_cut(h, PartitionConfig(1))
    elif len(assignment.edges) != h.num_bipartite_edges or len(assignment.masters) != (
        h.num_vertices + h.num_hyperedges
    ):
        raise EngineError("partition assignment does not cover this hypergraph")

    report = RunReport()
    t0 = time.perf_counter()
    runner = _Runner(h, assignment, v_program, he_program, workers, debug)
    try:
        inbox = None
        for step in range(max_iters):
            if step > 0 and not any(inbox):
                break
            to_he, rec = runner.phase(Side.VERTEX, step, inbox, initial_msg)
            report.phases.append(rec)
            report.rounds = step + 1
            if rec.emitted == 0:
                break
            inbox, rec = runner.phase(Side.HYPEREDGE, step, to_he, None)
            report.phases.append(rec)
            if rec.emitted == 0:
                break
        result = h.with_attrs(runner.final_attrs(Side.VERTEX), runner.final_attrs(Side.HYPEREDGE))
    finally:
        runner.close()
    report.execution_seconds = time.perf_counter() - t0
    return result, report
