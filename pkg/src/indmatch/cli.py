"""Command line interface: gen | run | exact | verify | bench.

Machine-readable output (JSON reports, CSV tables) goes to stdout or the
requested files; human-readable summaries go to stderr. Exit codes:
0 success, 2 input error, 3 precondition violated (guarantees void,
heuristic result still printed), 4 exact-solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .exact import exact_induced_matching
from .generators import GenSpec, GenerationError, named_instance
from .graph import GraphError, read_edge_list, write_edge_list
from .greedy import (
    PreconditionError,
    approx_bip_detail,
    degenerate_greedy,
    greedy_f,
    greedy_strong_coloring,
    lemma_threshold,
    local_search,
)
from .harness import (
    VerifyConfig,
    algorithm_report,
    benchmark_json,
    load_manifest,
    reports_to_csv,
    run_benchmark,
    verify_instance,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


def parse_threshold(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphError(f"bad threshold {text!r}: {exc}") from exc


def _emit(report: dict, output) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.named:
        spec = GenSpec(family="named", name=args.named)
    elif args.family == "regular":
        spec = GenSpec(family="regular", n=args.n, d=args.d, seed=args.seed)
    elif args.family == "bipartite-regular":
        spec = GenSpec(family="bipartite-regular", n_side=args.n_side,
                       d=args.d, seed=args.seed)
    elif args.family == "k-degenerate":
        spec = GenSpec(family="k-degenerate", n=args.n, k=args.k, d=args.d,
                       seed=args.seed)
    else:
        raise GraphError("specify --named or --family")
    G = spec.build()
    write_edge_list(G, args.output)
    if args.manifest:
        entries = []
        if os.path.exists(args.manifest):
            entries = load_manifest(args.manifest)
        entries.append(spec.to_json())
        with open(args.manifest, "w", encoding="utf-8") as fh:
            json.dump(entries, fh, indent=2)
            fh.write("\n")
    print(f"wrote {spec.label()}: n={G.n}, m={G.m} -> {args.output}",
          file=sys.stderr)
    return EXIT_OK


def cmd_run(args) -> int:
    G = read_edge_list(args.graph)
    code = EXIT_OK
    if args.alg == "greedy":
        if args.f is None:
            raise GraphError("--f is required for --alg greedy")
        f = parse_threshold(args.f)
        M, trace = greedy_f(G, f)
        report = algorithm_report(
            G, "greedy", {"f": f"{f.numerator}/{f.denominator}"}, M,
            trace=trace if args.trace else None)
        report["residual_edges"] = trace.residual.m
    elif args.alg == "local-search":
        M = local_search(G)
        report = algorithm_report(G, "local-search", {}, M)
    elif args.alg == "approx-bip":
        if args.d is None:
            raise GraphError("--d is required for --alg approx-bip")
        M1, M2, trace, detail = approx_bip_detail(G, args.d)
        flags = detail["preconditions"]
        report = algorithm_report(
            G, "approx-bip", {"d": args.d}, M1 | M2,
            preconditions=flags,
            trace=trace if args.trace else None)
        report["greedy_size"] = detail["greedy_size"]
        report["local_search_size"] = detail["local_search_size"]
        report["residual_edges"] = detail["residual_edges"]
        if not all(flags.values()):
            code = EXIT_PRECONDITION
    elif args.alg == "degenerate":
        if args.k is None or args.d is None:
            raise GraphError("--k and --d are required for --alg degenerate")
        try:
            M = degenerate_greedy(G, args.k, args.d)
            flags = {"hypotheses_ok": True}
        except PreconditionError as exc:
            M = degenerate_greedy(G, args.k, args.d, enforce=False)
            flags = {"hypotheses_ok": False, "violation": str(exc)}
            code = EXIT_PRECONDITION
        report = algorithm_report(
            G, "degenerate",
            {"k": args.k, "d": args.d,
             "threshold": lemma_threshold(args.k, args.d)},
            M, preconditions=flags)
    elif args.alg == "strong-coloring":
        coloring = greedy_strong_coloring(G)
        report = {
            "algorithm": "strong-coloring",
            "params": {},
            "colors": coloring.num_colors,
            "classes": [sorted(c) for c in coloring.classes()],
        }
    else:
        raise GraphError(f"unknown algorithm {args.alg!r}")
    _emit(report, args.output)
    size = report.get("size", report.get("colors"))
    print(f"{args.alg}: result {size} on n={G.n}, m={G.m}", file=sys.stderr)
    return code


def cmd_exact(args) -> int:
    G = read_edge_list(args.graph)
    res = exact_induced_matching(G, args.budget)
    report = algorithm_report(G, "exact", {"node_budget": args.budget},
                              res.witness)
    report["optimum"] = res.optimum
    report["nodes_explored"] = res.nodes_explored
    report["budget_exhausted"] = res.budget_exhausted
    _emit(report, args.output)
    note = " (budget exhausted, best found)" if res.budget_exhausted else ""
    print(f"exact: optimum {res.optimum}{note}", file=sys.stderr)
    return EXIT_BUDGET if res.budget_exhausted else EXIT_OK


def _verify_config(args) -> VerifyConfig:
    kwargs = {}
    if args.algs:
        kwargs["algorithms"] = tuple(args.algs.split(","))
    if args.d is not None:
        kwargs["d"] = args.d
    kwargs["oracle"] = not args.no_oracle
    kwargs["oracle_edge_limit"] = args.oracle_limit
    kwargs["timings"] = args.timings
    return VerifyConfig(**kwargs)


def cmd_verify(args) -> int:
    G = read_edge_list(args.graph)
    report = verify_instance(G, _verify_config(args),
                             instance_id=os.path.basename(args.graph))
    _emit(report.to_json(), args.output)
    done = [c for c in report.checks if not c.skipped]
    failed = [c for c in done if not c.passed]
    print(f"verify: {len(done) - len(failed)}/{len(done)} checks passed, "
          f"{len(report.checks) - len(done)} skipped", file=sys.stderr)
    for c in failed:
        print(f"  FAIL {c.name}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    manifest = load_manifest(args.manifest)
    config = _verify_config(args)
    reports, errors = run_benchmark(
        manifest, config, base_dir=os.path.dirname(os.path.abspath(args.manifest)))
    os.makedirs(args.output, exist_ok=True)
    csv_path = os.path.join(args.output, "bench.csv")
    with open(csv_path, "w", encoding="utf-8") as fh:
        fh.write(reports_to_csv(reports, timings=args.timings))
    json_path = os.path.join(args.output, "bench.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(benchmark_json(reports, errors), fh, indent=2)
        fh.write("\n")
    written = [csv_path, json_path]
    if args.plots:
        from .plots import render_benchmark_figures
        written += render_benchmark_figures(reports, args.output)
    print(f"bench: {len(reports)} instances, {len(errors)} errors -> "
          + ", ".join(written), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indmatch",
        description="Induced matching algorithms, exact oracle, and bound checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--family",
                   choices=["regular", "bipartite-regular", "k-degenerate"])
    p.add_argument("--named", help="named fixture, e.g. petersen, cycle(5)")
    p.add_argument("--n", type=int)
    p.add_argument("--n-side", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--manifest", help="append the instance spec to this manifest")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run one algorithm on a graph file")
    p.add_argument("--alg", required=True,
                   choices=["greedy", "local-search", "approx-bip",
                            "degenerate", "strong-coloring"])
    p.add_argument("--f", help="greedy threshold, integer or num/den")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trace", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("graph")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("exact", help="exact maximum induced matching")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("-o", "--output")
    p.add_argument("graph")
    p.set_defaults(func=cmd_exact)

    for name, helptext in [("verify", "check every applicable bound"),
                           ("bench", "verify a whole manifest of instances")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--all", action="store_true",
                       help="run all algorithms (the default)")
        p.add_argument("--algs", help="comma-separated algorithm subset")
        p.add_argument("--d", type=int)
        p.add_argument("--no-oracle", action="store_true")
        p.add_argument("--oracle-limit", type=int, default=40)
        p.add_argument("--timings", action="store_true")
        if name == "verify":
            p.add_argument("-o", "--output")
            p.add_argument("graph")
            p.set_defaults(func=cmd_verify)
        else:
            p.add_argument("--manifest", required=True)
            p.add_argument("--plots", action="store_true")
            p.add_argument("-o", "--output", default="bench_output")
            p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, GenerationError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
