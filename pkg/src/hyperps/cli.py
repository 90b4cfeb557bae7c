"""Command line entry point: ``hyperps {stats,partition,run,generate}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import algorithms as alg
from .core import HypergraphError, UnknownNodeError
from .formats import dump, load, write_results_tsv
from .generate import describe, generate
from .partition import STRATEGIES, PartitionConfig, partition, partition_stats

HYPEREDGE_STATEFUL = ("pagerank-entropy", "labelprop", "sssp")

def _add_partition_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=list(STRATEGIES), default="rvc")
    p.add_argument("--parts", type=int, default=1, metavar="K")
    p.add_argument("--cutoff", type=int, default=100, metavar="N",
                   help="degree/cardinality cutoff for hybrid strategies")
    p.add_argument("--seed", type=int, default=0)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperps", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="print dataset counts")
    s.add_argument("--input", required=True, type=Path)
    s.add_argument("--representation", choices=["bipartite", "clique"], default="bipartite")
    s.add_argument("--clique-cap", type=int, default=None,
                   help="stop counting clique pairs after this many candidates")

    p = sub.add_parser("partition", help="partition and report replication statistics")
    p.add_argument("--input", required=True, type=Path)
    _add_partition_flags(p)

    r = sub.add_parser("run", help="partition, run an algorithm, write report and results")
    r.add_argument("--input", required=True, type=Path)
    r.add_argument("--algorithm", choices=list(alg.ALGORITHMS), required=True)
    _add_partition_flags(r)
    r.add_argument("--max-iters", type=int, default=30)
    r.add_argument("--alpha", type=float, default=0.15)
    r.add_argument("--source", type=int, action="append", default=None,
                   help="source vertex for sssp (repeatable)")
    r.add_argument("--representation", choices=["bipartite", "clique"], default="bipartite")
    r.add_argument("--threads", type=int, default=1)
    r.add_argument("--out", type=Path, default=Path("hyperps-out"))
    r.add_argument("--debug", action="store_true", help="check mirror coherence every phase")

    g = sub.add_parser("generate", help="write a synthetic hypergraph")
    g.add_argument("--vertices", type=int, required=True)
    g.add_argument("--hyperedges", type=int, required=True)
    g.add_argument("--distribution", choices=["uniform", "powerlaw"], default="uniform")
    g.add_argument("--min-cardinality", type=int, default=1)
    g.add_argument("--max-cardinality", type=int, default=10)
    g.add_argument("--vertex-skew", type=float, default=0.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", type=Path, required=True)
    return parser

def _config(args: argparse.Namespace) -> dict:
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items())}

def cmd_stats(args) -> dict:
    h = load(args.input)
    return describe(h, clique=args.representation == "clique", clique_cap=args.clique_cap)

def cmd_partition(args) -> dict:
    h = load(args.input)
    cfg = PartitionConfig(args.parts, args.cutoff, seed=args.seed)
    t0 = time.perf_counter()
    a = partition(h, args.strategy, cfg)
    elapsed = time.perf_counter() - t0
    return {"strategy": args.strategy, "parts": args.parts,
            "partition_seconds": elapsed, **partition_stats(a, h).to_dict()}

def validate_run(args, parser: argparse.ArgumentParser) -> None:
    if args.algorithm == "sssp" and not args.source:
        parser.error("--algorithm sssp requires at least one --source")
    if args.representation == "clique" and args.algorithm in HYPEREDGE_STATEFUL:
        parser.error(
            f"--representation clique cannot be used with {args.algorithm}: "
            "the clique expansion drops hyperedge state"
        )
    if args.threads < 1 or args.parts < 1:
        parser.error("--threads and --parts must be >= 1")

def cmd_run(args) -> dict:
    h = load(args.input)
    cfg = PartitionConfig(args.parts, args.cutoff, seed=args.seed)
    if args.representation == "clique":
        h = alg.clique_hypergraph(h)
    t0 = time.perf_counter()
    a = partition(h, args.strategy, cfg)
    part_seconds = time.perf_counter() - t0
    stats = partition_stats(a, h).to_dict()
    kw = dict(assignment=a, workers=args.threads, debug=args.debug)
    if args.algorithm == "pagerank":
        res = alg.page_rank(h, alg.PageRankConfig(args.alpha, args.max_iters), **kw)
    elif args.algorithm == "pagerank-entropy":
        res = alg.page_rank_entropy(h, alg.PageRankConfig(args.alpha, args.max_iters), **kw)
    elif args.algorithm == "labelprop":
        res = alg.label_propagation(h, args.max_iters, **kw)
    else:
        res = alg.shortest_paths(h, args.source, args.max_iters, **kw)

    args.out.mkdir(parents=True, exist_ok=True)
    names = ("value", "entropy") if args.algorithm == "pagerank-entropy" else ("value",)
    tsv = write_results_tsv(alg.results_rows(res), args.out / "results.tsv", names)
    report = res.report
    report.config = _config(args)
    report.partition_seconds = part_seconds
    report.partition_stats = stats
    report.result_paths = [str(tsv)]
    doc = report.to_dict()
    (args.out / "report.json").write_text(json.dumps(doc, indent=2) + "\n")
    return doc

def cmd_generate(args) -> dict:
    h = generate(args.vertices, args.hyperedges, args.distribution,
                 min_cardinality=args.min_cardinality, max_cardinality=args.max_cardinality,
                 vertex_skew=args.vertex_skew, seed=args.seed)
    dump(h, args.output)
    return {"output": str(args.output), **describe(h)}

def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "run":
        validate_run(args, parser)
    handler = {"stats": cmd_stats, "partition": cmd_partition,
               "run": cmd_run, "generate": cmd_generate}[args.command]
    try:
        out = handler(args)
    except (OSError, HypergraphError, UnknownNodeError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hyperps: error: {msg}", file=sys.stderr)
        return 1
    if args.command == "run":
        totals = out["totals"]
        print(json.dumps({"rounds": out["rounds"],
                          "partition_seconds": out["partition_seconds"],
                          "execution_seconds": out["execution_seconds"],
                          "shipped": totals["shipped"], "synced": totals["synced"],
                          "results": out["result_paths"]}, indent=2))
    else:
        print(json.dumps(out, indent=2))
    return 0

if __name__ == "__main__":
    sys.exit(main())
