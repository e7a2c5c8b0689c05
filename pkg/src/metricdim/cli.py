"""Command line interface.

Four subcommands: ``analyze`` reports both dimensions of a graph file,
``verify`` checks a candidate landmark set, ``compare`` sweeps the
exhaustive corpus against the brute-force oracle, and ``gen`` writes
family graphs in the edge-list format the other commands read.

Exit codes: 0 success, 1 verification or comparison failure, 2 invalid
input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import corpus
from .configurations import detect_configurations
from .decomposition import decompose
from .dimension import DimensionResult, compute_dimensions
from .graph_core import (
    Graph,
    GraphInputError,
    all_pairs_distances,
    parse_edge_list,
    validate_unicyclic,
)
from .landmarks import build_context, is_branch_resolving
from .oracle import brute_force_dim, brute_force_edim, is_edge_generator, is_vertex_generator


def _load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_edge_list(text)


def _report_dict(result: DimensionResult, elapsed: float | None) -> dict:
    decomp = result.decomposition
    graph = decomp.graph
    vertex_pair = result.vertex_report.vertex_witness
    edge_pair = result.edge_report.edge_witness
    report = {
        "n": graph.n,
        "m": graph.m,
        "g": decomp.cycle.length,
        "L": decomp.min_branch_resolving,
        "b": decomp.branch_active_count,
        "branch_active": sorted(decomp.branch_active),
        "dim": {
            "value": result.dim,
            "delta": result.delta,
            "status": result.abc_status,
            "generator": sorted(result.vertex_generator),
            "witness": list(vertex_pair) if result.abc_status == "positive" else None,
        },
        "edim": {
            "value": result.edim,
            "delta": result.delta_e,
            "status": result.ade_status,
            "generator": sorted(result.edge_generator),
            "witness": (
                [list(edge_pair[0]), list(edge_pair[1])]
                if result.ade_status == "positive"
                else None
            ),
        },
        "difference": result.difference,
    }
    if elapsed is not None:
        report["timing"] = round(elapsed, 6)
    return report


def _print_text_report(result: DimensionResult, elapsed: float | None) -> None:
    decomp = result.decomposition
    graph = decomp.graph
    cycle = decomp.cycle
    print(f"n={graph.n} m={graph.m} g={cycle.length}")
    print("cycle: " + " ".join(str(v) for v in cycle.vertices))
    active = ",".join(str(i) for i in sorted(decomp.branch_active)) or "-"
    print(
        f"L={decomp.min_branch_resolving} b={decomp.branch_active_count} "
        f"branch-active: {active}"
    )
    for label, value, delta, status, generator, base, report, names, witness in (
        (
            "vertex metric dimension",
            result.dim,
            result.delta,
            result.abc_status,
            result.vertex_generator,
            result.vertex_base_set,
            result.vertex_report,
            result.vertex_report.vertex_config_names(),
            result.vertex_report.vertex_witness,
        ),
        (
            "edge metric dimension",
            result.edim,
            result.delta_e,
            result.ade_status,
            result.edge_generator,
            result.edge_base_set,
            result.edge_report,
            result.edge_report.edge_config_names(),
            result.edge_report.edge_witness,
        ),
    ):
        print(f"{label}: {value} (delta={delta}, {status})")
        print(f"  generator: {{{', '.join(str(v) for v in sorted(generator))}}}")
        ctx = build_context(decomp, base)
        lab = ctx.labelling
        base_text = ", ".join(str(v) for v in sorted(base))
        print(
            f"  base set {{{base_text}}}: start={lab.start} "
            f"direction={'+1' if lab.direction == 1 else '-1'} "
            f"k={ctx.max_active_index} active={','.join(str(i) for i in sorted(ctx.active))}"
        )
        if status == "positive":
            print(f"  configurations: {', '.join(names)}")
            print(f"  witness pair: {witness}")
        else:
            print("  configurations: none (this base set is a generator)")
    print(f"difference (dim - edim): {result.difference}")
    if elapsed is not None:
        print(f"timing: {elapsed:.6f}s")


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = _load_graph(args.path)
    started = time.perf_counter()
    decomp = decompose(graph, validate_unicyclic(graph))
    result = compute_dimensions(decomp)
    elapsed = None if args.no_timing else time.perf_counter() - started
    if args.json:
        print(json.dumps(_report_dict(result, elapsed), indent=2))
    else:
        _print_text_report(result, elapsed)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.path)
    try:
        landmarks = frozenset(int(part) for part in args.set.split(",") if part.strip())
    except ValueError:
        raise GraphInputError(f"cannot parse landmark set {args.set!r}") from None
    if not landmarks:
        raise GraphInputError("landmark set is empty")
    for v in landmarks:
        if not 0 <= v < graph.n:
            raise GraphInputError(f"unknown vertex id {v}")
    dist = all_pairs_distances(graph)
    if args.mode == "vertex":
        ok, pair = is_vertex_generator(dist, landmarks)
    else:
        ok, pair = is_edge_generator(dist, graph.edges, landmarks)
    if ok:
        print("generator")
        return 0
    suffix = ""
    decomp = decompose(graph, validate_unicyclic(graph))
    active = {decomp.tree_of[v] for v in landmarks}
    if len(active) >= 2 and is_branch_resolving(decomp, landmarks):
        report = detect_configurations(build_context(decomp, landmarks))
        if args.mode == "vertex" and report.blocks_vertex:
            pair = report.vertex_witness
            suffix = f"; configuration {', '.join(report.vertex_config_names())}"
        elif args.mode == "edge" and report.blocks_edge:
            pair = report.edge_witness
            suffix = f"; configuration {', '.join(report.edge_config_names())}"
    print(f"not a generator; pair {pair}{suffix}")
    return 1


def _compare_one(graph: Graph) -> tuple[int, int, int, int, int, int]:
    decomp = decompose(graph, validate_unicyclic(graph))
    result = compute_dimensions(decomp)
    oracle_dim = brute_force_dim(graph).value
    oracle_edim = brute_force_edim(graph).value
    return (graph.n, decomp.cycle.length, result.dim, result.edim, oracle_dim, oracle_edim)


def cmd_compare(args: argparse.Namespace) -> int:
    try:
        graphs = list(corpus.enumerate_unicyclic(args.max_n))
    except corpus.EnumerationBoundError as exc:
        raise GraphInputError(str(exc)) from exc
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_compare_one, graphs, chunksize=8))
    else:
        rows = [_compare_one(graph) for graph in graphs]

    mismatches = 0
    per_n: dict[int, list[int]] = {}
    tallies = {-1: 0, 0: 0, 1: 0}
    parity_violations = 0
    for index, (n, g, dim, edim, oracle_dim, oracle_edim) in enumerate(rows):
        stats = per_n.setdefault(n, [0, 0])
        stats[0] += 1
        if (dim, edim) != (oracle_dim, oracle_edim):
            mismatches += 1
            stats[1] += 1
            print(
                f"mismatch at index {index}: n={n} g={g} "
                f"structural ({dim}, {edim}) vs oracle ({oracle_dim}, {oracle_edim})"
            )
        tallies[dim - edim] += 1
        if g % 2 == 1 and dim > edim:
            parity_violations += 1
        if g % 2 == 0 and dim < edim:
            parity_violations += 1
    for n in sorted(per_n):
        count, bad = per_n[n]
        print(f"n={n}: {count} graphs, {bad} mismatches")
    print(f"total: {len(rows)} graphs, {mismatches} mismatches")
    print(
        f"difference dim-edim: -1 in {tallies[-1]}, 0 in {tallies[0]}, +1 in {tallies[1]}"
    )
    print(f"parity violations: {parity_violations}")
    return 1 if mismatches else 0


def _parse_keyword_params(params: list[str], required: tuple[str, ...]) -> dict[str, int]:
    values: dict[str, int] = {}
    for param in params:
        key, _, raw = param.partition("=")
        if key not in required or not raw:
            raise GraphInputError(f"unexpected parameter {param!r}")
        try:
            values[key] = int(raw)
        except ValueError:
            raise GraphInputError(f"unexpected parameter {param!r}") from None
    missing = [key for key in required if key not in values]
    if missing:
        raise GraphInputError(f"missing parameter {missing[0]}=...")
    return values


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    params = args.params
    if family in ("cycle", "corona"):
        if len(params) != 1:
            raise GraphInputError(f"{family} takes exactly one size parameter")
        try:
            size = int(params[0])
        except ValueError:
            raise GraphInputError(f"bad size {params[0]!r}") from None
        graph = corpus.cycle_graph(size) if family == "cycle" else corpus.corona(size)
    elif family == "random":
        values = _parse_keyword_params(params, ("n", "g", "seed"))
        graph = corpus.random_unicyclic(values["n"], values["g"], values["seed"])
    elif family == "fixture":
        if len(params) != 1:
            raise GraphInputError("fixture takes exactly one name parameter")
        named = corpus.fixtures()
        if params[0] not in named:
            raise GraphInputError(
                f"unknown fixture {params[0]!r}; available: {', '.join(sorted(named))}"
            )
        graph = named[params[0]]
    else:
        raise GraphInputError(f"unknown family {family!r}")
    text = corpus.to_edge_list(graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metricdim",
        description="Vertex and edge metric dimensions of unicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report both dimensions of a graph file")
    analyze.add_argument("path")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--text", action="store_true", help="human-readable output (default)")
    analyze.add_argument("--no-timing", action="store_true", help="omit the timing field")
    analyze.set_defaults(handler=cmd_analyze)

    verify = sub.add_parser("verify", help="check a candidate landmark set")
    verify.add_argument("path")
    verify.add_argument("--set", required=True, help="comma-separated vertex ids")
    verify.add_argument("--mode", required=True, choices=("vertex", "edge"))
    verify.set_defaults(handler=cmd_verify)

    compare = sub.add_parser(
        "compare", help="sweep the exhaustive corpus against the brute-force oracle"
    )
    compare.add_argument("--max-n", required=True, type=int)
    compare.add_argument("--jobs", type=int, default=1)
    compare.set_defaults(handler=cmd_compare)

    gen = sub.add_parser("gen", help="write a family graph as an edge list")
    gen.add_argument("family", help="cycle, corona, random, or fixture")
    gen.add_argument("params", nargs="*", help="e.g. 7, or n=9 g=5 seed=7, or TWINLEAF6")
    gen.add_argument("--out", help="output path (default stdout)")
    gen.set_defaults(handler=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
