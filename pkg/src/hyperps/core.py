"""Hypergraph data model.

A hypergraph is stored as a set of vertices plus a set of hyperedges, each
hyperedge holding an ordered, duplicate-free tuple of member vertex ids.
Both sides carry arbitrary attributes.  Values are immutable after
construction and may be shared freely across threads.
"""
from __future__ import annotations

import enum
import logging
import numbers
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Any, Callable, Iterable, Mapping, NamedTuple, Sequence

import numpy as np

log = logging.getLogger(__name__)

MAX_ID = 2**64 - 1


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


class UnknownNodeError(KeyError):
    pass


class Side(enum.IntEnum):
    VERTEX = 0
    HYPEREDGE = 1


class NodeId(NamedTuple):
    """Tagged node id; vertex 3 and hyperedge 3 are distinct nodes."""

    side: Side
    raw: int

    def __repr__(self) -> str:
        return f"{'v' if self.side == Side.VERTEX else 'e'}{self.raw}"


def vid(raw: int) -> NodeId:
    return NodeId(Side.VERTEX, raw)


def eid(raw: int) -> NodeId:
    return NodeId(Side.HYPEREDGE, raw)


class BipartiteEdge(NamedTuple):
    """Incidence record, always directed vertex -> hyperedge."""

    src: int
    dst: int


@dataclass(frozen=True)
class Hyperedge:
    id: int
    members: tuple[int, ...]
    weight: float = 1.0

    @property
    def cardinality(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CliqueGraph:
    """Clique expansion: one edge per co-occurring vertex pair, keyed (u, w) with u < w."""

    vertices: Mapping[int, Any]
    edges: Mapping[tuple[int, int], Any]

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def _check_id(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, numbers.Integral):
        raise HypergraphError(f"{what}: id {x!r} is not an integer")
    x = int(x)
    if x < 0 or x > MAX_ID:
        raise HypergraphError(f"{what}: id {x} outside unsigned 64-bit range")
    return x


class Hypergraph:
    """Immutable hypergraph with vertex attributes ``VD`` and hyperedge attributes ``HED``.

    Use :func:`build` for the common construction path; the constructor takes
    already-validated :class:`Hyperedge` records.
    """

    def __init__(
        self,
        vertices: Mapping[int, Any],
        hyperedges: Iterable[Hyperedge],
        hyperedge_attrs: Mapping[int, Any] | None = None,
        duplicate_members: int = 0,
    ):
        edges = {}
        for he in hyperedges:
            if he.id in edges:
                raise HypergraphError(f"duplicate hyperedge id {he.id}")
            edges[he.id] = he
        self._edges: dict[int, Hyperedge] = dict(sorted(edges.items()))
        self._vattrs: dict[int, Any] = dict(sorted(vertices.items()))
        hattrs = dict(hyperedge_attrs or {})
        self._hattrs: dict[int, Any] = {e: hattrs.get(e) for e in self._edges}
        self.duplicate_members = duplicate_members

        incident: dict[int, list[int]] = {v: [] for v in self._vattrs}
        for he in self._edges.values():
            for v in he.members:
                try:
                    incident[v].append(he.id)
                except KeyError:
                    raise HypergraphError(
                        f"hyperedge {he.id} references unknown vertex {v}"
                    ) from None
        self._incident = {v: tuple(es) for v, es in incident.items()}
        self._src_dst: tuple[np.ndarray, np.ndarray] | None = None

    # -- basic views -------------------------------------------------------
    @property
    def vertices(self) -> Mapping[int, Any]:
        return MappingProxyType(self._vattrs)

    @property
    def hyperedges(self) -> Mapping[int, Hyperedge]:
        return MappingProxyType(self._edges)

    @property
    def hyperedge_attrs(self) -> Mapping[int, Any]:
        return MappingProxyType(self._hattrs)

    @property
    def num_vertices(self) -> int:
        return len(self._vattrs)

    @property
    def num_hyperedges(self) -> int:
        return len(self._edges)

    @property
    def num_bipartite_edges(self) -> int:
        return sum(len(he.members) for he in self._edges.values())

    def __repr__(self) -> str:
        return (
            f"Hypergraph(vertices={self.num_vertices}, "
            f"hyperedges={self.num_hyperedges}, incidences={self.num_bipartite_edges})"
        )

    # -- queries -----------------------------------------------------------
    def degree(self, v: int) -> int:
        """Number of hyperedges containing vertex ``v``."""
        try:
            return len(self._incident[v])
        except KeyError:
            raise UnknownNodeError(f"unknown vertex {v}") from None

    def cardinality(self, e: int) -> int:
        try:
            return len(self._edges[e].members)
        except KeyError:
            raise UnknownNodeError(f"unknown hyperedge {e}") from None

    def members(self, e: int) -> tuple[int, ...]:
        try:
            return self._edges[e].members
        except KeyError:
            raise UnknownNodeError(f"unknown hyperedge {e}") from None

    def incident(self, v: int) -> tuple[int, ...]:
        """Hyperedge ids containing ``v``, ascending."""
        try:
            return self._incident[v]
        except KeyError:
            raise UnknownNodeError(f"unknown vertex {v}") from None

    def neighbors(self, node: NodeId) -> tuple[int, ...]:
        """Ids on the opposite side incident to ``node``."""
        if node.side == Side.VERTEX:
            return self.incident(node.raw)
        return self.members(node.raw)

    def max_degree(self) -> int:
        return max((len(es) for es in self._incident.values()), default=0)

    def max_cardinality(self) -> int:
        return max((len(he.members) for he in self._edges.values()), default=0)

    def weight(self, e: int) -> float:
        try:
            return self._edges[e].weight
        except KeyError:
            raise UnknownNodeError(f"unknown hyperedge {e}") from None

    # -- representations ---------------------------------------------------
    def bipartite_edges(self) -> list[BipartiteEdge]:
        """All (vertex, hyperedge) incidences, ordered by hyperedge id then member order."""
        return [
            BipartiteEdge(v, he.id) for he in self._edges.values() for v in he.members
        ]

    def incidence_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """``(src, dst)`` uint64 arrays in :meth:`bipartite_edges` order."""
        if self._src_dst is None:
            n = self.num_bipartite_edges
            src = np.empty(n, dtype=np.uint64)
            dst = np.empty(n, dtype=np.uint64)
            i = 0
            for he in self._edges.values():
                c = len(he.members)
                src[i : i + c] = he.members
                dst[i : i + c] = he.id
                i += c
            src.flags.writeable = False
            dst.flags.writeable = False
            self._src_dst = (src, dst)
        return self._src_dst

    def to_clique_graph(
        self, merge: Callable[[list[tuple[Any, float]]], Any] = len
    ) -> CliqueGraph:
        """Expand every hyperedge into a clique of its members.

        ``merge`` receives the list of ``(attr, weight)`` of every hyperedge
        shared by the pair and returns the edge attribute.  Pairs sharing
        several hyperedges collapse into one edge.
        """
        shared: dict[tuple[int, int], list[tuple[Any, float]]] = {}
        for e, he in self._edges.items():
            if len(he.members) < 2:
                continue
            item = (self._hattrs[e], he.weight)
            for u, w in combinations(sorted(he.members), 2):
                shared.setdefault((u, w), []).append(item)
        edges = {pair: merge(items) for pair, items in sorted(shared.items())}
        return CliqueGraph(MappingProxyType(dict(self._vattrs)), MappingProxyType(edges))

    # -- derivation --------------------------------------------------------
    def with_attrs(
        self,
        vertex_attrs: Mapping[int, Any] | None = None,
        hyperedge_attrs: Mapping[int, Any] | None = None,
    ) -> "Hypergraph":
        """Same topology, replaced attributes (missing keys keep old values)."""
        new = object.__new__(Hypergraph)
        new._edges = self._edges
        new._incident = self._incident
        new._src_dst = self._src_dst
        new.duplicate_members = self.duplicate_members
        new._vattrs = self._vattrs if vertex_attrs is None else {
            v: vertex_attrs.get(v, a) for v, a in self._vattrs.items()
        }
        new._hattrs = self._hattrs if hyperedge_attrs is None else {
            e: hyperedge_attrs.get(e, a) for e, a in self._hattrs.items()
        }
        return new

    def map_vertices(self, f: Callable[[int, Any], Any]) -> "Hypergraph":
        return self.with_attrs(vertex_attrs={v: f(v, a) for v, a in self._vattrs.items()})

    def map_hyperedges(self, f: Callable[[Hyperedge, Any], Any]) -> "Hypergraph":
        return self.with_attrs(
            hyperedge_attrs={e: f(self._edges[e], a) for e, a in self._hattrs.items()}
        )

    def without_isolated(self) -> "Hypergraph":
        """Drop degree-0 vertices; hyperedges are unaffected."""
        keep = {v: a for v, a in self._vattrs.items() if self._incident[v]}
        return Hypergraph(keep, self._edges.values(), self._hattrs, self.duplicate_members)


def build(
    hyperedge_list: Iterable[Any],
    vertex_attrs: Mapping[int, Any] | None = None,
    *,
    ids: Sequence[int] | None = None,
    hyperedge_attrs: Mapping[int, Any] | None = None,
) -> Hypergraph:
    """Build a hypergraph from member lists.

    Each item is either a sequence of vertex ids or a ``(members, weight)``
    pair.  Hyperedge ids default to the input position.  Repeated members
    inside one hyperedge are dropped and counted in ``duplicate_members``.
    Vertices are the union of all members plus any keys of ``vertex_attrs``
    (which may add isolated vertices); missing vertex attributes are ``None``.

    >>> h = build([[1, 2], ([1, 2, 3, 4], 2.0)])
    >>> h.num_vertices, h.cardinality(1), h.weight(1)
    (4, 4, 2.0)
    """
    items = list(hyperedge_list)
    if ids is not None and len(ids) != len(items):
        raise HypergraphError(f"{len(ids)} ids supplied for {len(items)} hyperedges")
    edges = []
    dups = 0
    seen_vertices: dict[int, None] = {}
    for i, item in enumerate(items):
        members, weight = _split_item(item)
        where = f"hyperedge at index {i}"
        if len(members) == 0:
            raise HypergraphError(f"{where} has no members")
        w = float(weight)
        if not w >= 0.0:
            raise HypergraphError(f"{where}: weight {weight!r} must be non-negative")
        uniq = dict.fromkeys(_check_id(m, where) for m in members)
        dups += len(members) - len(uniq)
        e = i if ids is None else _check_id(ids[i], where)
        edges.append(Hyperedge(e, tuple(uniq), w))
        seen_vertices.update(uniq)
    if dups:
        log.warning("dropped %d duplicate hyperedge member(s)", dups)
    vattrs = dict.fromkeys(seen_vertices)
    for v, a in (vertex_attrs or {}).items():
        vattrs[_check_id(v, "vertex_attrs")] = a
    return Hypergraph(vattrs, edges, hyperedge_attrs, duplicate_members=dups)


def _split_item(item: Any) -> tuple[Sequence[Any], Any]:
    if isinstance(item, Hyperedge):
        return item.members, item.weight
    if (
        isinstance(item, tuple)
        and len(item) == 2
        and not isinstance(item[0], numbers.Integral)
        and isinstance(item[1], numbers.Real)
    ):
        return list(item[0]), item[1]
    return list(item), 1.0


def count_clique_edges(h: Hypergraph, cap: int | None = None) -> tuple[int, bool]:
    """Count distinct co-occurring vertex pairs without materializing the clique graph.

    Returns ``(count, exact)``.  When ``cap`` is given and the number of
    candidate pairs exceeds it, counting stops and the returned value is a
    lower bound with ``exact=False``.
    """
    index = {v: i for i, v in enumerate(h.vertices)}
    n = len(index)
    keys: list[np.ndarray] = []
    buffered = 0
    total = 0
    uniq = np.empty(0, dtype=np.uint64)

    def flush() -> np.ndarray:
        nonlocal keys, buffered
        merged = np.unique(np.concatenate([uniq, *keys]))
        keys, buffered = [], 0
        return merged

    for he in h.hyperedges.values():
        c = len(he.members)
        if c < 2:
            continue
        idx = np.sort(np.fromiter((index[v] for v in he.members), dtype=np.uint64, count=c))
        a, b = np.triu_indices(c, k=1)
        keys.append(idx[a] * np.uint64(n) + idx[b])
        buffered += len(a)
        total += len(a)
        if buffered > 4_000_000:
            uniq = flush()
        if cap is not None and total > cap:
            uniq = flush()
            log.warning("clique pair count exceeded cap %d; reporting lower bound", cap)
            return len(uniq), False
    if keys:
        uniq = flush()
    return len(uniq), True
