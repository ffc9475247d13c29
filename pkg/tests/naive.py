"""Slow set-based reference implementations used to cross-check the package.

Everything here is written independently of the library internals: graphs
are lists of neighbor sets, searches enumerate subsets or permutations
directly, and no bit tricks are used.
"""

from __future__ import annotations

import itertools
from collections import deque


def adj_sets(g) -> list[set[int]]:
    """Neighbor sets of a package Graph."""
    return [{u for u in range(g.n) if g.adj[v] >> u & 1} for v in range(g.n)]


def naive_closure(adj: list[set[int]], filled: set[int]) -> set[int]:
    """Apply the color change rule one force at a time, lowest forcer first."""
    filled = set(filled)
    while True:
        for v in sorted(filled):
            unfilled = adj[v] - filled
            if len(unfilled) == 1:
                filled.add(unfilled.pop())
                break
        else:
            return filled


def naive_closure_random(adj: list[set[int]], filled: set[int], rng) -> set[int]:
    """Same closure, applying available forces in random order."""
    filled = set(filled)
    while True:
        moves = [v for v in filled if len(adj[v] - filled) == 1]
        if not moves:
            return filled
        v = rng.choice(sorted(moves))
        filled.add((adj[v] - filled).pop())


def naive_failed_number(adj: list[set[int]]) -> tuple[int, set[int]]:
    """Largest set whose closure misses a vertex, by descending search."""
    n = len(adj)
    full = set(range(n))
    for k in range(n - 1, -1, -1):
        for combo in itertools.combinations(range(n), k):
            s = set(combo)
            if naive_closure(adj, s) != full:
                return k, s
    raise AssertionError("even the empty set forced everything on n=0?")


def naive_zero_number(adj: list[set[int]]) -> tuple[int, set[int]]:
    """Smallest set whose closure is everything, by ascending search."""
    n = len(adj)
    full = set(range(n))
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            s = set(combo)
            if naive_closure(adj, s) == full:
                return k, s
    raise AssertionError("the full vertex set failed to force itself")


def naive_components(n: int, adj: list[set[int]]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for v in range(n):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u] - comp:
                comp.add(w)
                queue.append(w)
        seen |= comp
        out.append(comp)
    return out


def naive_cut_vertices(n: int, adj: list[set[int]]) -> set[int]:
    """Vertices whose removal increases the component count, by deletion."""
    base = len(naive_components(n, adj))
    out = set()
    for v in range(n):
        rest = [u for u in range(n) if u != v]
        relabel = {u: i for i, u in enumerate(rest)}
        sub = [set() for _ in rest]
        for u in rest:
            sub[relabel[u]] = {relabel[w] for w in adj[u] if w != v}
        if len(naive_components(n - 1, sub)) > base:
            out.add(v)
    return out


def are_isomorphic(g1, g2) -> bool:
    """Permutation search over package Graphs; fine for n <= 8."""
    if g1.n != g2.n:
        return False
    e1 = {(u, v) for u in range(g1.n) for v in range(g1.n)
          if u < v and g1.adj[u] >> v & 1}
    if sorted(len(a) for a in adj_sets(g1)) != sorted(len(a) for a in adj_sets(g2)):
        return False
    for perm in itertools.permutations(range(g2.n)):
        e2 = {tuple(sorted((perm[u], perm[v])))
              for u in range(g2.n) for v in range(g2.n)
              if u < v and g2.adj[u] >> v & 1}
        if e1 == e2:
            return True
    return False


def count_classes_by_dedupe(n: int) -> tuple[int, int]:
    """(all, connected) isomorphism class counts by labeled enumeration.

    Enumerates every labeled graph on n vertices as an edge bitmask and
    keeps the minimum over all vertex permutations.  numpy makes the
    permutation sweep affordable up to n = 6.
    """
    import numpy as np

    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    m = len(pairs)
    graphs = np.arange(1 << m, dtype=np.int64)
    bits = (graphs[:, None] >> np.arange(m)) & 1
    weights = np.int64(1) << np.arange(m, dtype=np.int64)
    minima = graphs.copy()
    for perm in itertools.permutations(range(n)):
        emap = np.array(
            [index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs],
            dtype=np.intp,
        )
        np.minimum(minima, bits[:, emap] @ weights, out=minima)
    reps = np.unique(minima)
    connected = 0
    for rep in reps.tolist():
        adj = [set() for _ in range(n)]
        for (a, b), i in index.items():
            if rep >> i & 1:
                adj[a].add(b)
                adj[b].add(a)
        connected += len(naive_components(n, adj)) == 1
    return len(reps), connected
