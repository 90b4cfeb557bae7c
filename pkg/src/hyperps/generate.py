"""Synthetic hypergraphs and Table-I style summaries."""
from __future__ import annotations

import logging
from typing import Any

import numpy as np

from .core import Hypergraph, build, count_clique_edges

log = logging.getLogger(__name__)


def generate(
    num_vertices: int,
    num_hyperedges: int,
    cardinality: str = "uniform",
    *,
    min_cardinality: int = 1,
    max_cardinality: int = 10,
    exponent: float = 2.0,
    vertex_skew: float = 0.0,
    seed: int = 0,
) -> Hypergraph:
    """Random hypergraph over vertex ids ``0 .. num_vertices - 1``.

    Cardinalities are drawn from ``[min_cardinality, max_cardinality]``,
    either uniformly or with ``P(c) ~ c**-exponent`` (``"powerlaw"``).
    Members are distinct; vertex ``i`` is picked with weight
    ``(i + 1) ** -vertex_skew`` so a positive skew yields hub vertices.
    Only vertices that end up in some hyperedge are present.
    """
    if num_vertices < 1 or num_hyperedges < 0:
        raise ValueError("need num_vertices >= 1 and num_hyperedges >= 0")
    if not 1 <= min_cardinality <= max_cardinality:
        raise ValueError("need 1 <= min_cardinality <= max_cardinality")
    if max_cardinality > num_vertices:
        raise ValueError("max_cardinality exceeds num_vertices")
    rng = np.random.default_rng(seed)
    sizes = np.arange(min_cardinality, max_cardinality + 1)
    if cardinality == "uniform":
        cards = rng.integers(min_cardinality, max_cardinality + 1, size=num_hyperedges)
    elif cardinality == "powerlaw":
        p = sizes.astype(float) ** -exponent
        cards = rng.choice(sizes, size=num_hyperedges, p=p / p.sum())
    else:
        raise ValueError(f"unknown cardinality distribution {cardinality!r}")

    if vertex_skew:
        cdf = np.cumsum(np.arange(1, num_vertices + 1, dtype=float) ** -vertex_skew)
        cdf /= cdf[-1]

        def draw(n):
            return np.minimum(np.searchsorted(cdf, rng.random(n), side="right"), num_vertices - 1)
    else:
        def draw(n):
            return rng.integers(0, num_vertices, size=n)

    edges = []
    for c in cards.tolist():
        chosen: dict[int, None] = {}
        while len(chosen) < c:
            chosen.update(dict.fromkeys(draw(2 * (c - len(chosen))).tolist()))
        edges.append(list(chosen)[:c])
    h = build(edges)
    log.info(
        "generated %d vertices, %d hyperedges, max degree %d, max cardinality %d",
        h.num_vertices, h.num_hyperedges, h.max_degree(), h.max_cardinality(),
    )
    return h


def describe(h: Hypergraph, clique: bool = False, clique_cap: int | None = None) -> dict[str, Any]:
    """Dataset summary in the column order of a Table-I row."""
    row: dict[str, Any] = {
        "vertices": h.num_vertices,
        "hyperedges": h.num_hyperedges,
        "max_degree": h.max_degree(),
        "max_cardinality": h.max_cardinality(),
        "bipartite_edges": h.num_bipartite_edges,
    }
    if clique:
        n, exact = count_clique_edges(h, clique_cap)
        row["clique_edges"] = n
        if not exact:
            row["clique_edges_lower_bound"] = True
    return row
