"""Isomorph-free censuses of zero forcing quantities over small graphs.

Graph classes are generated by extending each (n-1)-vertex class with a
new vertex over every neighborhood subset and deduplicating by canonical
form; this is simple and provably complete, and fast enough through n = 9.
Canonical forms come from equitable-partition refinement on degrees plus
backtracking over the refined cells, minimizing the packed upper-triangle
adjacency bit-string.

A census walks the connected classes per vertex count, computes the exact
zero forcing and failed zero forcing numbers of each, tallies them per
(value, n) cell, and checks every graph against the proven bounds and the
open n <= k + 4 conjecture.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .exact import EXACT_CAP_DEFAULT, failed_zero_forcing_number, zero_forcing_number
from .graph6_io import Graph6Error, parse_graph6, read_stream, write_graph6
from .graph_core import Graph, is_connected

CANON_MAX = 16
BUILTIN_MAX = 9


# ---------------------------------------------------------------------------
# Canonical forms.


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling result; equal bytes iff isomorphic graphs."""

    data: bytes


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Split cells by neighbor counts into every cell until stable.

    The cell order (and the signature-sorted order of the pieces a cell
    splits into) is isomorphism-invariant.
    """
    while True:
        out: list[int] = []
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            buckets: dict[tuple[int, ...], int] = {}
            rem = cell
            while rem:
                bit = rem & -rem
                rem ^= bit
                row = adj[bit.bit_length() - 1]
                sig = tuple((row & c).bit_count() for c in cells)
                if sig in buckets:
                    buckets[sig] |= bit
                else:
                    buckets[sig] = bit
            if len(buckets) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    out.append(buckets[sig])
        if not changed:
            return out
        cells = out


def _homogeneous(adj: tuple[int, ...], cells: list[int]) -> bool:
    """Is every cell pair all-or-nothing adjacent (and each cell a clique
    or independent set)?  Then any cell-respecting order gives one string."""
    for i, ci in enumerate(cells):
        row = adj[(ci & -ci).bit_length() - 1]
        inner = (row & ci).bit_count()
        if inner and inner != ci.bit_count() - 1:
            return False
        for cj in cells[i + 1:]:
            cross = (row & cj).bit_count()
            if cross and cross != cj.bit_count():
                return False
    return True


def _pack_bits(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper triangle in column-major order under a vertex order, packed
    big-endian into an int (same bit layout graph6 uses)."""
    bits = 0
    for j in range(1, len(order)):
        col = order[j]
        for i in range(j):
            bits = bits << 1 | (adj[order[i]] >> col & 1)
    return bits


def _cells_order(cells: list[int]) -> list[int]:
    order = []
    for cell in cells:
        while cell:
            bit = cell & -cell
            cell ^= bit
            order.append(bit.bit_length() - 1)
    return order


def _canon_bits(n: int, adj: tuple[int, ...]) -> int:
    """Minimum packed adjacency string over the refinement search tree."""
    if n == 1:
        return 0
    by_degree: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        by_degree[d] = by_degree.get(d, 0) | 1 << v
    best = None

    def search(cells: list[int]) -> None:
        nonlocal best
        target = -1
        for i, cell in enumerate(cells):
            if cell & (cell - 1):
                target = i
                break
        if target == -1 or _homogeneous(adj, cells):
            bits = _pack_bits(adj, _cells_order(cells))
            if best is None or bits < best:
                best = bits
            return
        cell = cells[target]
        rem = cell
        while rem:
            bit = rem & -rem
            rem ^= bit
            search(_refine(adj, cells[:target] + [bit, cell ^ bit] + cells[target + 1:]))

    search(_refine(adj, [by_degree[d] for d in sorted(by_degree)]))
    return best


def _adj_of_bits(n: int, bits: int) -> tuple[int, ...]:
    """Rebuild an adjacency tuple from a packed upper-triangle string."""
    adj = [0] * n
    pos = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return tuple(adj)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form usable as an isomorphism-class key."""
    if g.n > CANON_MAX:
        raise ValueError(f"canonical labeling capped at {CANON_MAX} vertices")
    bits = _canon_bits(g.n, g.adj)
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    return CanonicalForm(bytes([g.n]) + bits.to_bytes(width, "big"))


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    if g.n > CANON_MAX:
        raise ValueError(f"canonical labeling capped at {CANON_MAX} vertices")
    return Graph(g.n, _adj_of_bits(g.n, _canon_bits(g.n, g.adj)))


# ---------------------------------------------------------------------------
# Isomorph-free generation.


def _extended_adj(parent_adj: tuple[int, ...], neighborhood: int, n: int) -> tuple[int, ...]:
    top = 1 << (n - 1)
    adj = list(parent_adj) + [neighborhood]
    rem = neighborhood
    while rem:
        bit = rem & -rem
        rem ^= bit
        adj[bit.bit_length() - 1] |= top
    return tuple(adj)


def _novel_extensions(parents: Iterable[Graph], n: int) -> Iterator[Graph]:
    seen: set[int] = set()
    for parent in parents:
        for neighborhood in range(1 << (n - 1)):
            adj = _extended_adj(parent.adj, neighborhood, n)
            bits = _canon_bits(n, adj)
            if bits not in seen:
                seen.add(bits)
                yield Graph(n, _adj_of_bits(n, bits))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    return tuple(_novel_extensions(_classes(n - 1), n))


def generate_graphs(n: int) -> Iterator[Graph]:
    """One canonically labeled graph per isomorphism class on n vertices.

    Built-in generation covers 1 <= n <= 9; the top level streams without
    being cached.  Includes disconnected classes; filter downstream.
    """
    if not 1 <= n <= BUILTIN_MAX:
        raise ValueError(f"built-in generation covers 1..{BUILTIN_MAX}, not {n}")
    if n < BUILTIN_MAX:
        yield from _classes(n)
    else:
        yield from _novel_extensions(_classes(n - 1), n)


# ---------------------------------------------------------------------------
# Census records, findings, tables.


@dataclass(frozen=True)
class GraphRecord:
    """Exact values for one connected graph class."""

    graph6: str
    n: int
    zero: int
    failed: int


@dataclass(frozen=True)
class Finding:
    """A bound violation or conjecture hit discovered during checking."""

    kind: str
    graph6: str
    n: int
    detail: str


def check_record(record: GraphRecord) -> list[Finding]:
    """Check one connected graph's values against the proven bounds and
    report (not assert) any conjecture counterexample."""
    out = []
    floor_bound = (record.n - 1) // 2
    if record.failed < floor_bound:
        out.append(
            Finding(
                "lower-bound",
                record.graph6,
                record.n,
                f"failed number {record.failed} below floor((n-1)/2) = {floor_bound}",
            )
        )
    if record.n >= 2 and record.failed > record.n - 2:
        out.append(
            Finding(
                "upper-bound",
                record.graph6,
                record.n,
                f"failed number {record.failed} above n - 2 = {record.n - 2}",
            )
        )
    if record.failed == record.zero and record.n > record.failed + 4:
        out.append(
            Finding(
                "conjecture",
                record.graph6,
                record.n,
                f"equal numbers {record.failed} with n = {record.n} > k + 4",
            )
        )
    return out


@dataclass
class CensusTable:
    """Tallies of connected classes per (value, n) cell.

    f_counts[(k, n)] counts classes with failed number k; e_counts[(k, n)]
    counts those whose zero forcing number also equals k.  Totals count all
    connected classes per n, including those with values above k_max.
    exemplars retains the graph6 strings behind each e_counts cell.
    """

    max_n: int
    k_max: int
    f_counts: dict[tuple[int, int], int] = field(default_factory=dict)
    e_counts: dict[tuple[int, int], int] = field(default_factory=dict)
    connected_totals: dict[int, int] = field(default_factory=dict)
    sources: dict[int, str] = field(default_factory=dict)
    violations: list[Finding] = field(default_factory=list)
    exemplars: dict[tuple[int, int], list[str]] = field(default_factory=dict)
    read_errors: list[str] = field(default_factory=list)

    def f_total(self, k: int) -> int:
        return sum(c for (kk, _), c in self.f_counts.items() if kk == k)

    def e_total(self, k: int) -> int:
        return sum(c for (kk, _), c in self.e_counts.items() if kk == k)

    def add(self, record: GraphRecord) -> None:
        self.connected_totals[record.n] = self.connected_totals.get(record.n, 0) + 1
        k = record.failed
        if 1 <= k <= self.k_max:
            self.f_counts[(k, record.n)] = self.f_counts.get((k, record.n), 0) + 1
            if record.zero == k:
                self.e_counts[(k, record.n)] = self.e_counts.get((k, record.n), 0) + 1
                self.exemplars.setdefault((k, record.n), []).append(record.graph6)
        self.violations.extend(check_record(record))

    def finalize(self) -> None:
        """Deterministic ordering of list-valued fields."""
        self.violations.sort(key=lambda f: (f.n, f.kind, f.graph6))
        for cell in self.exemplars.values():
            cell.sort()

    def to_text_table(self) -> str:
        """Tab-separated table: one row per tallied value, columns by n."""
        ns = list(range(1, self.max_n + 1))
        lines = ["\t".join(["quantity"] + [f"n={n}" for n in ns] + ["total"])]
        for k in range(1, self.k_max + 1):
            row = [self.f_counts.get((k, n), 0) for n in ns]
            lines.append("\t".join([f"F={k}"] + [str(c) for c in row] + [str(sum(row))]))
        for k in range(1, self.k_max + 1):
            row = [self.e_counts.get((k, n), 0) for n in ns]
            lines.append("\t".join([f"F=Z={k}"] + [str(c) for c in row] + [str(sum(row))]))
        totals = [self.connected_totals.get(n, 0) for n in ns]
        lines.append("\t".join(["connected"] + [str(c) for c in totals] + [str(sum(totals))]))
        return "\n".join(lines) + "\n"

    def to_document(self) -> dict:
        """JSON-ready structured document with stable key order."""
        def nest(counts: dict[tuple[int, int], int]) -> dict[str, dict[str, int]]:
            out: dict[str, dict[str, int]] = {}
            for (k, n), c in sorted(counts.items()):
                out.setdefault(str(k), {})[str(n)] = c
            return out

        return {
            "schema": "zeroforcing-census/1",
            "max_n": self.max_n,
            "k_max": self.k_max,
            "f_counts": nest(self.f_counts),
            "e_counts": nest(self.e_counts),
            "f_totals": {str(k): self.f_total(k) for k in range(1, self.k_max + 1)},
            "e_totals": {str(k): self.e_total(k) for k in range(1, self.k_max + 1)},
            "connected_totals": {str(n): c for n, c in sorted(self.connected_totals.items())},
            "sources": {str(n): s for n, s in sorted(self.sources.items())},
            "violations": [
                {"kind": f.kind, "graph6": f.graph6, "n": f.n, "detail": f.detail}
                for f in self.violations
            ],
            "exemplars": {
                str(k): {
                    str(n): self.exemplars[(k, n)]
                    for (kk, n) in sorted(self.exemplars)
                    if kk == k
                }
                for k in sorted({k for k, _ in self.exemplars})
            },
            "read_errors": list(self.read_errors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=True) + "\n"


def check_bounds_and_conjecture(
    table: CensusTable, records: Iterable[GraphRecord] = ()
) -> list[Finding]:
    """Table-level consistency plus per-record bound and conjecture checks.

    A failed number of k on a connected graph pins n into k+2 .. 2k+2, and
    every equal-numbers cell is bounded by its failed cell.
    """
    findings = []
    for (k, n), c in sorted(table.e_counts.items()):
        if c > table.f_counts.get((k, n), 0):
            findings.append(
                Finding("table", "", n, f"equal-numbers cell ({k}, {n}) exceeds its failed cell")
            )
    for (k, n), c in sorted(table.f_counts.items()):
        if c and not k + 2 <= n <= 2 * k + 2:
            findings.append(
                Finding("table", "", n, f"failed cell ({k}, {n}) outside k+2 <= n <= 2k+2")
            )
    for record in records:
        findings.extend(check_record(record))
    return findings


# ---------------------------------------------------------------------------
# Running a census.


def _evaluate(graph6: str, cap: int = EXACT_CAP_DEFAULT) -> GraphRecord:
    g = parse_graph6(graph6)
    zero = zero_forcing_number(g, cap).value
    failed = failed_zero_forcing_number(g, cap).value
    return GraphRecord(graph6, g.n, zero, failed)


def _connected_graph6_stream(
    n: int, source: str | None, fail_fast: bool, read_errors: list[str]
) -> Iterator[str]:
    if source is None:
        for g in generate_graphs(n):
            if is_connected(g):
                yield write_graph6(g)
        return
    errors: list[Graph6Error] = []
    with open(source) as handle:
        for g in read_stream(handle, fail_fast=fail_fast, errors=errors):
            if g.n != n:
                raise Graph6Error(f"{source}: expected {n} vertices, found {g.n}")
            if is_connected(g):
                yield write_graph6(g)
    read_errors.extend(f"{source}: {e}" for e in errors)


def run_census(
    max_n: int,
    k_max: int = 4,
    sources: dict[int, str] | None = None,
    jobs: int = 1,
    cap: int = EXACT_CAP_DEFAULT,
    fail_fast: bool = True,
) -> CensusTable:
    """Exact census of connected classes for every n up to max_n.

    Classes come from built-in generation (n <= 9) unless sources maps an n
    to a newline-delimited graph6 file, which is then trusted to be
    isomorph-free.  Evaluation parallelizes over graphs with jobs > 1; the
    output is identical for any job count.
    """
    sources = dict(sources or {})
    for n in range(1, max_n + 1):
        if n > BUILTIN_MAX and n not in sources:
            raise ValueError(f"no built-in generation for n={n}; provide a graph6 source")
    table = CensusTable(max_n=max_n, k_max=k_max)
    pool = None
    if jobs > 1:
        pool = multiprocessing.get_context("fork").Pool(jobs)
    try:
        for n in range(1, max_n + 1):
            source = sources.get(n)
            table.sources[n] = source if source is not None else "builtin"
            stream = _connected_graph6_stream(n, source, fail_fast, table.read_errors)
            if pool is None:
                records = (_evaluate(s, cap) for s in stream)
            else:
                records = pool.imap(_EvalTask(cap), stream, chunksize=64)
            for record in records:
                table.add(record)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    table.finalize()
    return table


class _EvalTask:
    """Picklable evaluation callable for worker pools."""

    def __init__(self, cap: int):
        self.cap = cap

    def __call__(self, graph6: str) -> GraphRecord:
        return _evaluate(graph6, self.cap)
