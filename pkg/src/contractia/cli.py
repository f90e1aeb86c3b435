"""Batch command-line interface.

Reports are JSON-lines: one record per graph (or per graph/size pair for
sweeps) streamed to stdout, followed by a single summary record, so large
corpora run in constant memory.  All tie-breaks in the library are fixed and
no wall-clock entropy enters the output except the elapsed-time fields,
which ``--no-timing`` zeroes for byte-reproducible reports.

Exit codes: 0 success, 1 I/O or internal error, 2 usage, 3 existence-negative.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .graph import Graph, mask_of, vertex_list
from .connectivity import vertex_connectivity
from .contractible import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    failing_clause,
    oracle_find,
)
from .decomposition import NotTwoConnectedError, block_tree_to_dot, decompose
from .generators import (
    matches_k34,
    parse_family,
    generate,
    random_3_connected,
    read_corpus,
    to_graph6,
)
from .search import (
    PropertyViolationError,
    SearchResult,
    TAG_FALLBACK_EXHAUSTIVE,
    TAG_FALLBACK_ORACLE,
    constructive_search,
    find_k_contractible,
    hypotheses_satisfied,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


def _emit(record: dict) -> None:
    print(json.dumps(record, separators=(",", ":")))


def _resolve_budget(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("CONTRACTIA_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _trace_json(result: SearchResult | None) -> list[dict] | None:
    if result is None:
        return None
    out = []
    for level in result.levels:
        entry: dict = {"k": level.k, "case": level.case}
        if level.trace is not None:
            entry["x"] = level.trace.chosen
            entry["candidates"] = vertex_list(level.trace.candidates)
            entry["forbidden"] = vertex_list(level.trace.forbidden)
            entry["path_neighbors"] = vertex_list(level.trace.path_neighbors)
        out.append(entry)
    return out


def _search_record(
    line_no: int,
    g6: str,
    g: Graph,
    k: int,
    *,
    method: str,
    budget: int,
    check: bool,
    timing: bool,
) -> dict:
    t0 = time.perf_counter()
    conn = vertex_connectivity(g) if g.n >= 2 else 0
    outcome = "error"
    found: list[int] | None = None
    trace = None
    violation: str | None = None
    known_exception = False
    error_msg: str | None = None
    result: SearchResult | None = None

    try:
        if method == "oracle":
            w = oracle_find(g, k, k, budget=budget)
            outcome = "found" if w is not None else "none"
            found = vertex_list(w) if w is not None else None
            trace = [{"k": k, "case": TAG_FALLBACK_ORACLE}] if w is not None else None
        elif method == "constructive":
            result = constructive_search(g, k, budget=budget, check=check)
            outcome, found, trace = "found", result.sorted_vertices(), _trace_json(result)
        else:
            result = find_k_contractible(
                g, k, budget=budget, check=check, connectivity=conn
            )
            if result is None:
                outcome = "none"
            else:
                outcome, found, trace = "found", result.sorted_vertices(), _trace_json(result)
    except BudgetExceededError as exc:
        outcome, error_msg = "budget", str(exc)
    except PropertyViolationError as exc:
        outcome, error_msg, violation = "error", str(exc), f"check-failed: {exc}"
    except Exception as exc:  # per-record robustness: report, do not abort the batch
        outcome, error_msg = "error", f"{type(exc).__name__}: {exc}"

    three_connected = conn >= 3 and g.n >= 4
    if three_connected and violation is None:
        if hypotheses_satisfied(g, k) and method in ("auto", "constructive"):
            if outcome == "none":
                violation = "existence-violated: hypotheses hold but no set found"
            elif outcome == "found" and result is not None:
                if result.fallback_reason is not None:
                    violation = f"constructive-fallback: {result.fallback_reason}"
                elif any(lv.case == TAG_FALLBACK_EXHAUSTIVE for lv in result.levels):
                    violation = "exchange-fallback: principled choice failed verification"
        if k == 4 and outcome == "none":
            if matches_k34(g):
                known_exception = True
            elif g.n >= 7:
                violation = "4-set-existence-violated: non-exceptional graph has no 4-set"

    elapsed = int((time.perf_counter() - t0) * 1000) if timing else 0
    rec = {
        "record": "result",
        "input_line": line_no,
        "graph6": g6,
        "n": g.n,
        "m": g.m,
        "delta": g.min_degree,
        "connectivity": conn,
        "k": k,
        "outcome": outcome,
        "set": found,
        "case_trace": trace,
        "known_exception": known_exception,
        "violation": violation,
        "elapsed_ms": elapsed,
    }
    if error_msg is not None:
        rec["error"] = error_msg
    return rec


def _summary(records: list[dict], n_graphs: int) -> dict:
    counts = {"found": 0, "none": 0, "budget": 0, "error": 0}
    violations = 0
    for r in records:
        counts[r["outcome"]] += 1
        if r.get("violation"):
            violations += 1
    return {
        "record": "summary",
        "graphs": n_graphs,
        "records": len(records),
        **counts,
        "violations": violations,
        "total_ms": sum(r["elapsed_ms"] for r in records),
    }


def _load_inputs(args, parser) -> list[tuple[int, str, Graph]]:
    if args.family:
        name = args.family.split(":", 1)[0]
        if name == "random3":
            spec = parse_family(args.family)
            try:
                n, percent = spec.params
            except ValueError:
                parser.error("random3 takes two parameters: random3:<n>,<percent>")
            g, _ = random_3_connected(n, percent / 100.0, args.seed)
        else:
            g = generate(parse_family(args.family, args.seed))
        return [(1, to_graph6(g), g)]
    return [(ln, to_graph6(g), g) for ln, g in read_corpus(args.input)]


def _render_figures(records: list[dict], out_dir: str) -> None:
    from . import figures  # deferred: matplotlib import is slow

    figures.render_report_figures(records, out_dir)


def cmd_find(args, parser) -> int:
    if args.k < 1:
        parser.error("--k must be at least 1")
    budget = _resolve_budget(args.budget)
    inputs = _load_inputs(args, parser)
    records = []
    for line_no, g6, g in inputs:
        records.append(_search_record(
            line_no, g6, g, args.k,
            method=args.method, budget=budget, check=False, timing=args.timing,
        ))
        _emit(records[-1])
    _emit(_summary(records, len(inputs)))
    if args.figures:
        _render_figures(records, args.figures)
    if any(r["outcome"] in ("error", "budget") for r in records):
        return EXIT_ERROR
    if any(r["outcome"] == "none" for r in records):
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    try:
        ids = [int(tok) for tok in args.set.split(",") if tok.strip() != ""]
    except ValueError:
        parser.error(f"--set must be a comma-separated id list, got {args.set!r}")
    if not ids:
        parser.error("--set must name at least one vertex")
    failures = 0
    count = 0
    for line_no, g in read_corpus(args.input):
        count += 1
        if any(v < 0 or v >= g.n for v in ids):
            parser.error(f"set ids out of range for graph on line {line_no} (n={g.n})")
        w = mask_of(ids)
        if w == g.full_mask:
            parser.error(f"set covers all vertices of graph on line {line_no}")
        clause = failing_clause(g, w)
        _emit({
            "record": "verify",
            "input_line": line_no,
            "graph6": to_graph6(g),
            "n": g.n,
            "set": sorted(set(ids)),
            "contractible": clause is None,
            "failed_clause": clause,
        })
        if clause is not None:
            failures += 1
    if count == 0:
        print("no graphs in input", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_NEGATIVE if failures else EXIT_OK


def cmd_decompose(args, parser) -> int:
    had_error = False
    for line_no, g in read_corpus(args.input):
        try:
            dec = decompose(g)
        except NotTwoConnectedError:
            print(f"line {line_no}: input graph is not 2-connected", file=sys.stderr)
            had_error = True
            continue
        if args.format == "dot":
            print(block_tree_to_dot(dec.block_tree))
        else:
            _emit({
                "record": "decomposition",
                "input_line": line_no,
                "graph6": to_graph6(g),
                "n": g.n,
                "single_cutsets": [c.sorted_vertices() for c in dec.single_cutsets],
                "parts": [
                    {
                        "vertices": p.sorted_vertices(),
                        "interior": vertex_list(p.interior),
                        "boundary": vertex_list(p.boundary),
                        "is_cycle": p.is_cycle,
                        "is_pendant": p.is_pendant,
                    }
                    for p in dec.parts
                ],
                "tree_edges": [list(e) for e in dec.block_tree.edges],
            })
    return EXIT_ERROR if had_error else EXIT_OK


def _sweep_task(task: tuple) -> dict:
    line_no, g6, k, budget, check, timing = task
    from .generators import parse_graph6

    g = parse_graph6(g6)
    return _search_record(
        line_no, g6, g, k, method="auto", budget=budget, check=check, timing=timing
    )


def cmd_sweep(args, parser) -> int:
    if args.kmin < 1 or args.kmax < args.kmin:
        parser.error("need 1 <= kmin <= kmax")
    budget = _resolve_budget(args.budget)
    graphs = [(ln, to_graph6(g)) for ln, g in read_corpus(args.corpus)]
    tasks = [
        (line_no, g6, k, budget, args.check_lemmas, args.timing)
        for line_no, g6 in graphs
        for k in range(args.kmin, args.kmax + 1)
    ]
    if args.jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_task, tasks, chunksize=8))
    else:
        records = [_sweep_task(t) for t in tasks]
    for rec in records:
        _emit(rec)
    summary = _summary(records, len(graphs))
    _emit(summary)
    if args.figures:
        _render_figures(records, args.figures)
    return EXIT_ERROR if summary["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contractia",
        description="Find, verify and analyze contractible vertex sets in "
                    "3-connected graphs (graph6 in, JSON-lines out).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_timing(p):
        p.add_argument("--timing", action=argparse.BooleanOptionalAction, default=True,
                       help="include wall-clock fields (--no-timing for "
                            "byte-reproducible reports)")

    p_find = sub.add_parser("find", help="search for a k-contractible set per input graph")
    src = p_find.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="graph6 file, one graph per line, '#' comments")
    src.add_argument("--family", help="generated graph, e.g. wheel:6, circulant:12,1,2,3, "
                                      "complete_bipartite:3,4, random3:10,50")
    p_find.add_argument("--k", type=int, required=True, help="target set size")
    p_find.add_argument("--method", choices=("auto", "constructive", "oracle"),
                        default="auto")
    p_find.add_argument("--seed", type=int, default=0, help="seed for random families")
    p_find.add_argument("--budget", type=int, default=None,
                        help="oracle candidate budget (default: CONTRACTIA_BUDGET or "
                             f"{DEFAULT_BUDGET})")
    p_find.add_argument("--figures", metavar="DIR", help="also render summary figures")
    add_timing(p_find)

    p_verify = sub.add_parser("verify", help="test whether a given set is contractible")
    p_verify.add_argument("--input", required=True)
    p_verify.add_argument("--set", required=True, help="comma-separated vertex ids")

    p_dec = sub.add_parser("decompose", help="single cutsets, parts and the block tree")
    p_dec.add_argument("--input", required=True)
    p_dec.add_argument("--format", choices=("json", "dot"), default="json")

    p_sweep = sub.add_parser("sweep", help="run the search across a corpus and size range")
    p_sweep.add_argument("--corpus", required=True)
    p_sweep.add_argument("--kmin", type=int, required=True)
    p_sweep.add_argument("--kmax", type=int, required=True)
    p_sweep.add_argument("--check-lemmas", action="store_true",
                         help="cross-validate every exchange and the structural "
                              "guarantees of every maximal intermediate set")
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="worker processes; output order stays the input order")
    p_sweep.add_argument("--budget", type=int, default=None)
    p_sweep.add_argument("--figures", metavar="DIR")
    add_timing(p_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "find": cmd_find,
        "verify": cmd_verify,
        "decompose": cmd_decompose,
        "sweep": cmd_sweep,
    }
    try:
        return handlers[args.command](args, parser)
    except BrokenPipeError:
        return EXIT_ERROR
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
