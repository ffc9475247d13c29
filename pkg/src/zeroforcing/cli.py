"""Command line front end.

Three commands: analyze (exact numbers plus a verified construction for
one or more graphs), witness (just the construction), and census (tables
over all connected classes per vertex count).  graph6 input comes from
arguments, files, or standard input.  Exit codes: 0 success, 1 usage or
parse errors, 2 verification failure or bound violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .census import run_census
from .exact import (
    ExactCapExceeded,
    failed_zero_forcing_number,
    zero_forcing_number,
)
from .forcing import derived_set, is_zero_forcing
from .graph6_io import Graph6Error, parse_graph6
from .graph_core import Graph, is_connected, vertices_of
from .witness import ConstructionError, verify_witness, witness_general

CLI_EXACT_CAP = 20

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="zeroforcing", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = sub.add_parser("analyze", help="exact numbers and a verified construction")
    analyze.add_argument("graphs", nargs="*", help="graph6 records (default: stdin lines)")
    analyze.add_argument("--exact-cap", type=int, default=CLI_EXACT_CAP,
                         help="largest n for exhaustive search (default %(default)s)")
    analyze.add_argument("--format", choices=("table", "structured"), default="table")

    witness = sub.add_parser("witness", help="guaranteed failed-set construction only")
    witness.add_argument("graphs", nargs="*", help="graph6 records (default: stdin lines)")
    witness.add_argument("--format", choices=("table", "structured"), default="table")

    census = sub.add_parser("census", help="tables over all connected classes")
    census.add_argument("--max-n", type=int, required=True)
    census.add_argument("--k-max", type=int, default=4)
    census.add_argument("--jobs", type=int, default=1)
    census.add_argument("--input", action="append", default=[], metavar="N=PATH",
                        help="graph6 file overriding built-in generation for one n")
    census.add_argument("--output", help="also write the structured document here")
    census.add_argument("--format", choices=("table", "structured"), default="table")
    census.add_argument("--exact-cap", type=int, default=CLI_EXACT_CAP)
    census.add_argument("--fail-fast", action="store_true",
                        help="stop on malformed graph6 records instead of skipping")
    return parser


def _input_records(args_graphs: list[str]) -> list[str]:
    if args_graphs:
        return args_graphs
    return [line for line in sys.stdin.read().splitlines() if line.strip()]


def _analysis_document(graph6: str, g: Graph, cap: int) -> tuple[dict, bool]:
    """Build the per-graph document; returns (document, all verifications ok)."""
    doc: dict = {
        "schema": "zeroforcing-analysis/1",
        "graph6": graph6,
        "n": g.n,
        "edges": g.edge_count(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": is_connected(g),
    }
    ok = True
    try:
        zero = zero_forcing_number(g, cap)
        zero_ok = is_zero_forcing(g, zero.witness)
        ok &= zero_ok
        doc["zero_forcing"] = {
            "value": zero.value,
            "witness": list(vertices_of(zero.witness)),
            "verified": zero_ok,
        }
        failed = failed_zero_forcing_number(g, cap)
        failed_ok = derived_set(g, failed.witness) != g.full
        ok &= failed_ok
        doc["failed_zero_forcing"] = {
            "value": failed.value,
            "witness": list(vertices_of(failed.witness)),
            "verified": failed_ok,
        }
    except ExactCapExceeded as exc:
        doc["zero_forcing"] = doc["failed_zero_forcing"] = {"skipped": str(exc)}
    report = witness_general(g)
    verdict = verify_witness(g, report)
    ok &= verdict.ok
    doc["witness"] = {
        "set": list(vertices_of(report.filled)),
        "route": report.route,
        "guaranteed_bound": report.guaranteed_bound,
        "stalled": report.stalled,
        "verified": verdict.ok,
        "failures": list(verdict.failures),
    }
    return doc, ok


def _witness_document(graph6: str, g: Graph) -> tuple[dict, bool]:
    report = witness_general(g)
    verdict = verify_witness(g, report)
    doc = {
        "schema": "zeroforcing-witness/1",
        "graph6": graph6,
        "n": g.n,
        "set": list(vertices_of(report.filled)),
        "route": report.route,
        "guaranteed_bound": report.guaranteed_bound,
        "stalled": report.stalled,
        "verified": verdict.ok,
        "failures": list(verdict.failures),
    }
    return doc, verdict.ok


def _print_analysis_table(doc: dict) -> None:
    print(f"graph6: {doc['graph6']}")
    if "edges" in doc:
        print(f"n: {doc['n']}  edges: {doc['edges']}  degrees: "
              f"{doc['min_degree']}..{doc['max_degree']}  connected: {doc['connected']}")
    for key, label in (("zero_forcing", "zero forcing"),
                       ("failed_zero_forcing", "failed zero forcing")):
        cell = doc.get(key)
        if cell is None:
            continue
        if "skipped" in cell:
            print(f"{label}: skipped ({cell['skipped']})")
        else:
            print(f"{label}: {cell['value']}  witness: "
                  f"{' '.join(map(str, cell['witness'])) or '-'}  "
                  f"verified: {cell['verified']}")
    w = doc["witness"] if "witness" in doc else doc
    print(f"construction: route {w['route']}  set: "
          f"{' '.join(map(str, w['set'])) or '-'}  bound: {w['guaranteed_bound']}  "
          f"verified: {w['verified']}")


def _run_graph_command(args, build) -> int:
    records = _input_records(args.graphs)
    if not records:
        print("no graph6 input", file=sys.stderr)
        return EXIT_USAGE
    all_ok = True
    first = True
    for record in records:
        try:
            g = parse_graph6(record)
        except Graph6Error as exc:
            print(f"bad graph6 record {record!r}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        try:
            doc, ok = build(record.strip(), g)
        except ConstructionError as exc:
            print(f"construction failed on {record!r}: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        all_ok &= ok
        if args.format == "structured":
            print(json.dumps(doc, sort_keys=True))
        else:
            if not first:
                print()
            _print_analysis_table(doc)
        first = False
    return EXIT_OK if all_ok else EXIT_VERIFY


def _parse_sources(items: list[str]) -> dict[int, str]:
    out: dict[int, str] = {}
    for item in items:
        key, sep, path = item.partition("=")
        if not sep or not key.isdigit():
            raise ValueError(f"--input expects N=PATH, got {item!r}")
        out[int(key)] = path
    return out


def _run_census(args) -> int:
    try:
        sources = _parse_sources(args.input)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        table = run_census(
            max_n=args.max_n,
            k_max=args.k_max,
            sources=sources,
            jobs=args.jobs,
            cap=args.exact_cap,
            fail_fast=args.fail_fast,
        )
    except (ValueError, Graph6Error, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(table.to_json())
    if args.format == "structured":
        sys.stdout.write(table.to_json())
    else:
        sys.stdout.write(table.to_text_table())
    if table.violations:
        for finding in table.violations:
            print(f"violation [{finding.kind}] n={finding.n} {finding.graph6}: "
                  f"{finding.detail}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "analyze":
        return _run_graph_command(
            args, lambda rec, g: _analysis_document(rec, g, args.exact_cap)
        )
    if args.command == "witness":
        return _run_graph_command(args, _witness_document)
    return _run_census(args)


if __name__ == "__main__":
    sys.exit(main())
