"""Command-line entry point.

Exit codes: 0 success, 1 oracle-check mismatch, 2 usage error,
3 unreadable/unwritable file or invalid input data.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from .betweenness import ORACLE_MAX_NODES, BetweennessParams, betweenness_oracle, k_betweenness, parse_cutoff
from .errors import NetDiversityError, ParseError, ValidationError
from .fixtures import KINDS, generate_fixture, random_graph
from .formatting import csv_text, dump_json
from .graph import ThresholdMode, ThresholdPolicy, load_edge_list, serialize_edge_list
from .metrics import compute_report
from .stats import correlate_report, load_performance, summarize

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

PROG = "netdiversity"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _cutoff(text):
    try:
        return parse_cutoff(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _non_negative(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value >= 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a finite number >= 0: {text!r}")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def build_parser():
    parser = _Parser(prog=PROG, description="Tie-strength and topological diversity metrics for networks.")
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_opts(p):
        p.add_argument("--input", required=True, help="edge-list CSV (src,dst[,weight])")
        p.add_argument("--directed", action="store_true", help="treat rows as directed ties")
        p.add_argument("--theta", type=_non_negative, default=0.0, help="tie-strength threshold (default 0)")
        p.add_argument(
            "--threshold-mode",
            choices=[m.value for m in ThresholdMode],
            default=ThresholdMode.FILTER_WEIGHTED.value,
        )
        p.add_argument("--cutoff", type=_cutoff, default=3, help="path-length cutoff, integer or 'inf' (default 3)")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--output", help="write here instead of standard output")

    p = sub.add_parser("metrics", help="per-node metric report")
    graph_opts(p)
    p.add_argument(
        "--include-self",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="count self-loops as contacts in the entropy (default on)",
    )
    p.add_argument("--workers", type=_positive_int, default=1, help="processes for betweenness")

    p = sub.add_parser("correlate", help="correlate metric columns with a performance vector")
    graph_opts(p)
    p.add_argument("--perf", required=True, help="performance CSV (node,value)")
    p.add_argument("--include-self", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--workers", type=_positive_int, default=1)

    p = sub.add_parser("summarize", help="network summary statistics")
    graph_opts(p)

    p = sub.add_parser("generate", help="write a fixture graph as an edge list")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--p", type=_non_negative, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--output")
    p.add_argument("--perf-output", help="broker-specialist only: write the performance vector here")

    p = sub.add_parser("oracle-check", help="compare fast k-betweenness with brute-force enumeration")
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--max-n", type=_positive_int, default=10)
    p.add_argument("--p", type=_non_negative, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=_non_negative, default=1e-9)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output")
    return parser


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from None


def _load(args):
    graph = load_edge_list(_read(args.input), directed=args.directed)
    policy = ThresholdPolicy(args.theta, args.threshold_mode)
    return graph, policy


def _render(obj, fmt):
    return obj.to_json() if fmt == "json" else obj.to_csv()


def cmd_metrics(args):
    graph, policy = _load(args)
    report = compute_report(graph, policy, BetweennessParams(args.cutoff), args.include_self, args.workers)
    _emit(_render(report, args.format), args.output)
    return EXIT_OK


def cmd_correlate(args):
    graph, policy = _load(args)
    perf = load_performance(_read(args.perf), graph)
    report = compute_report(graph, policy, BetweennessParams(args.cutoff), args.include_self, args.workers)
    _emit(_render(correlate_report(report, perf), args.format), args.output)
    return EXIT_OK


def cmd_summarize(args):
    graph, policy = _load(args)
    _emit(_render(summarize(graph, args.cutoff, policy), args.format), args.output)
    return EXIT_OK


def cmd_generate(args):
    if args.perf_output and args.kind != "broker-specialist":
        raise UsageError("--perf-output only applies to --kind broker-specialist")
    try:
        fixture = generate_fixture(args.kind, n=args.n, p=args.p, seed=args.seed, directed=args.directed)
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    _emit(serialize_edge_list(fixture.graph), args.output)
    if args.perf_output:
        _emit(fixture.performance.to_csv(), args.perf_output)
    return EXIT_OK


def oracle_check(trials=100, max_n=10, p=0.3, seed=0, tolerance=1e-9):
    """Run the fast/brute-force comparison on seeded random graphs.

    Graph ``t`` is directed for odd ``t``; each graph is checked at
    cutoffs 1, 2, 3 and unbounded. Returns a summary dict.
    """
    if max_n > ORACLE_MAX_NODES:
        raise UsageError(f"--max-n may not exceed {ORACLE_MAX_NODES}")
    if max_n < 2:
        raise UsageError("--max-n must be at least 2")
    rng = random.Random(seed)
    worst = 0.0
    comparisons = 0
    failures = 0
    for t in range(trials):
        n = rng.randint(2, max_n)
        g = random_graph(n, p, rng.randrange(2**32), directed=bool(t % 2))
        for cutoff in (1, 2, 3, None):
            params = BetweennessParams(cutoff)
            fast = k_betweenness(g, params)
            slow = betweenness_oracle(g, params)
            dev = max(abs(a - b) for a, b in zip(fast, slow))
            worst = max(worst, dev)
            comparisons += 1
            failures += dev > tolerance
    return {
        "status": "pass" if failures == 0 else "fail",
        "trials": trials,
        "comparisons": comparisons,
        "failures": failures,
        "max_deviation": worst,
        "tolerance": tolerance,
    }


def cmd_oracle_check(args):
    result = oracle_check(args.trials, args.max_n, args.p, args.seed, args.tolerance)
    if args.format == "json":
        text = dump_json(result)
    else:
        text = csv_text(tuple(result), [list(result.values())])
    _emit(text, args.output)
    return EXIT_OK if result["status"] == "pass" else EXIT_CHECK_FAILED


COMMANDS = {
    "metrics": cmd_metrics,
    "correlate": cmd_correlate,
    "summarize": cmd_summarize,
    "generate": cmd_generate,
    "oracle-check": cmd_oracle_check,
}


def _fail(kind, message, code):
    message = " ".join(str(message).split())
    sys.stderr.write(f"{PROG}: error: {kind}: {message}\n")
    return code


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail("usage", exc, EXIT_USAGE)
    except ParseError as exc:
        return _fail("parse", exc, EXIT_IO)
    except (ValidationError, NetDiversityError) as exc:
        return _fail("invalid-input", exc, EXIT_IO)
    except OSError as exc:
        return _fail("io", exc, EXIT_IO)


if __name__ == "__main__":
    sys.exit(main())
