"""Plain-text hyperedge-list files and result tables.

One hyperedge per line, members as whitespace-separated unsigned integers::

    # comment
    1 2
    w=2.5 1 2 3 4
    e=17 1 4 5

Leading ``w=<real>`` sets the weight (default 1.0).  Leading ``e=<id>`` sets
an explicit hyperedge id; lines without one take their 0-based position
among hyperedge lines.
"""
from __future__ import annotations

import math
import os
from pathlib import Path
from typing import IO, Iterable, Sequence

from .core import Hypergraph, HypergraphError, build


class FormatError(HypergraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_lines(lines: Iterable[str]) -> Hypergraph:
    items: list[tuple[list[int], float]] = []
    ids: list[int] = []
    explicit = False
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        weight = 1.0
        he_id = len(items)
        while tokens and "=" in tokens[0]:
            key, _, val = tokens.pop(0).partition("=")
            if key == "w":
                try:
                    weight = float(val)
                except ValueError:
                    raise FormatError(lineno, f"bad weight {val!r}") from None
                if not weight >= 0.0 or math.isinf(weight):
                    raise FormatError(lineno, f"weight {val!r} must be finite and non-negative")
            elif key == "e":
                he_id = _parse_id(val, lineno)
                explicit = True
            else:
                raise FormatError(lineno, f"unknown field {key!r}")
        if not tokens:
            raise FormatError(lineno, "hyperedge has no members")
        members = [_parse_id(t, lineno) for t in tokens]
        items.append((members, weight))
        ids.append(he_id)
    try:
        return build(items, ids=ids if explicit else None)
    except HypergraphError as exc:
        raise HypergraphError(f"invalid hypergraph: {exc}") from None


def _parse_id(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise FormatError(lineno, f"vertex id {tok!r} is not an unsigned integer")
    x = int(tok)
    if x >= 2**64:
        raise FormatError(lineno, f"id {tok} exceeds 64 bits")
    return x


def load(path: str | os.PathLike) -> Hypergraph:
    with open(path, encoding="utf-8") as f:
        return parse_lines(f)


def loads(text: str) -> Hypergraph:
    return parse_lines(text.splitlines())


def write(h: Hypergraph, f: IO[str]) -> None:
    sequential = list(h.hyperedges) == list(range(h.num_hyperedges))
    for he in h.hyperedges.values():
        head = []
        if not sequential:
            head.append(f"e={he.id}")
        if he.weight != 1.0:
            head.append(f"w={he.weight!r}")
        f.write(" ".join(head + [str(v) for v in he.members]) + "\n")


def dump(h: Hypergraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# {h.num_vertices} vertices, {h.num_hyperedges} hyperedges\n")
        write(h, f)


def dumps(h: Hypergraph) -> str:
    import io

    buf = io.StringIO()
    write(h, buf)
    return buf.getvalue()


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x) if math.isfinite(x) else ("inf" if x > 0 else "-inf")
    return str(x)


def write_results_tsv(rows: Sequence[tuple[str, int, tuple]], path: str | os.PathLike,
                      value_names: Sequence[str] = ("value",)) -> Path:
    """Write ``kind, id, value...`` rows with a header line."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write("\t".join(["kind", "id", *value_names]) + "\n")
        for kind, node, values in rows:
            f.write("\t".join([kind, str(node), *(_fmt(v) for v in values)]) + "\n")
    return path


def read_results_tsv(path: str | os.PathLike) -> list[tuple[str, int, tuple]]:
    rows = []
    with open(path, encoding="utf-8") as f:
        next(f)
        for line in f:
            kind, node, *vals = line.rstrip("\n").split("\t")
            rows.append((kind, int(node), tuple(_parse_value(v) for v in vals)))
    return rows


def _parse_value(tok: str):
    try:
        return int(tok)
    except ValueError:
        return float(tok)
