"""Command-line front end.

Subcommands:
  classify    enumerate all n-vertex graphs, classify, write JSONL + certificates
  realize     search one graph for a witness table
  check-star  report the necessary-condition flags for one graph
  verify      check a table file against a graph
  fixtures    run the bundled corpus and report mismatches

Exit codes: 0 success, 1 verdict mismatch / inconclusive / unsat, 2 usage or
parse error.  ZDG_SEED is reserved for compatibility and ignored: the search
is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from zdg.graphs import Graph6Error, parse_graph6
from zdg.conditions import check_all_conditions
from zdg.semigroup import find_realization, verify_witness, load_table
from zdg.enumeration import (
    ClassifyOptions,
    classify_all,
    ingest_atlas_index,
    write_report,
)
from zdg.fixtures import run_fixtures


def _parse_budget(text):
    if text is None or text == "unlimited":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be an integer or 'unlimited', got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zdg",
        description="Classify small connected graphs as zero-divisor graphs "
                    "of commutative semigroups with zero.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every graph on n vertices")
    p.add_argument("--n", type=int, required=True, help="vertex count (1..7)")
    p.add_argument("--out", default=None, help="JSONL report path")
    p.add_argument("--no-patterns", action="store_true",
                   help="disable constructive shortcuts; always run the search")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--budget", type=_parse_budget, default=None,
                   help="search node limit per graph, or 'unlimited'")
    p.add_argument("--atlas-index", default=None,
                   help="optional file of '<atlas_id> <graph6>' lines")

    p = sub.add_parser("realize", help="search for a witness table")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--budget", type=_parse_budget, default=None)

    p = sub.add_parser("check-star", help="necessary-condition report")
    p.add_argument("--graph", required=True, help="graph6 string")

    p = sub.add_parser("verify", help="verify a table file against a graph")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--table", required=True, help="JSON table path")

    p = sub.add_parser("fixtures", help="run the bundled corpus")
    p.add_argument("--fixtures", default=None, metavar="FILTER",
                   help="substring filter on fixture names")
    p.add_argument("--no-patterns", action="store_true")
    return parser


def _graph_or_exit(text):
    try:
        return parse_graph6(text)
    except (Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_classify(args):
    options = ClassifyOptions(use_patterns=not args.no_patterns,
                              use_duplication=not args.no_patterns,
                              budget=args.budget)
    atlas = None
    if args.atlas_index:
        atlas = ingest_atlas_index(args.atlas_index)
    out = args.out or f"zdg-report-n{args.n}.jsonl"
    records = classify_all(args.n, options, jobs=args.jobs)
    write_report(records, out, atlas_index=atlas)
    counts = Counter(r.category if r.category else "Inconclusive" for r in records)
    total = len(records)
    print(f"n={args.n}: {total} isomorphism classes -> {out}")
    for cat in ("ZDG", "StarNotZDG", "ConnectedNotStar", "Disconnected", "Inconclusive"):
        if counts.get(cat):
            print(f"  {cat}: {counts[cat]}")
    return 1 if counts.get("Inconclusive") else 0


def cmd_realize(args):
    g = _graph_or_exit(args.graph)
    cert = find_realization(g, budget=args.budget)
    if cert.sat:
        print("SAT: witness table found")
        print(cert.table.to_text())
        return 0
    kind = "exhaustive" if cert.exhaustive else "budget exhausted"
    print(f"UNSAT ({kind}), nodes explored: {cert.nodes_explored}")
    return 1


def cmd_check_star(args):
    g = _graph_or_exit(args.graph)
    report = check_all_conditions(g)
    print(json.dumps(report.to_json(), indent=1, sort_keys=True))
    return 0 if (report.connected and report.star_ok) else 1


def cmd_verify(args):
    g = _graph_or_exit(args.graph)
    try:
        table = load_table(args.table)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error reading table: {exc}", file=sys.stderr)
        return 2
    try:
        ok, why = verify_witness(g, table)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("OK" if ok else f"FAIL: {why}")
    return 0 if ok else 1


def cmd_fixtures(args):
    options = ClassifyOptions(use_patterns=not args.no_patterns,
                              use_duplication=not args.no_patterns)
    results = run_fixtures(args.fixtures, options)
    failures = 0
    discrepancies = 0
    for result in results:
        print(result.summary())
        failures += not result.passed
        discrepancies += len(result.discrepancies)
    print(f"{len(results)} fixtures: {len(results) - failures} ok, "
          f"{failures} failed, {discrepancies} documented discrepancies")
    return 1 if failures else 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "classify": cmd_classify,
        "realize": cmd_realize,
        "check-star": cmd_check_star,
        "verify": cmd_verify,
        "fixtures": cmd_fixtures,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
