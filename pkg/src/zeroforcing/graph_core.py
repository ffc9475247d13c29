"""Small simple graphs stored as tuples of neighbor bitmasks.

Vertices are 0..n-1 with n <= 64.  A vertex set is a plain int whose bit v
is set when vertex v belongs to the set; the adjacency of a graph is one
such mask per vertex.  Everything here treats graphs as immutable values,
and every choice a function makes (component order, cycle search order,
tie-breaks) is deterministic: lowest vertex index first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertex indices of a bitmask in ascending order."""
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex indices."""
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[v] is the neighbor bitmask of v.  Instances are hashable and
    compare by exact labeled structure.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def full(self) -> int:
        """Bitmask of the whole vertex set."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge (u, v) added."""
        if u == v:
            raise ValueError("self-loops are not allowed")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def validate(self) -> None:
        """Raise ValueError unless the adjacency is a simple graph."""
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"vertex {v} has neighbors outside the graph")
            if row >> v & 1:
                raise ValueError(f"vertex {v} has a self-loop")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge ({v}, {u}) is not symmetric")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, validating every endpoint."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def connected_components(g: Graph) -> list[int]:
    """Component bitmasks, ordered by size then by smallest member index."""
    comps = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: (c.bit_count(), c & -c))
    return comps


def components_within(g: Graph, keep: int) -> list[int]:
    """Components of the subgraph induced on a mask, without reindexing.

    Same ordering convention as connected_components.
    """
    comps = []
    seen = 0
    for v in iter_bits(keep):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= g.adj[u]
            frontier = grown & keep & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: (c.bit_count(), c & -c))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def cut_vertices(g: Graph) -> int:
    """Bitmask of articulation vertices.  Rejects disconnected input."""
    if not is_connected(g):
        raise ValueError("cut vertices are only defined here for connected graphs")
    disc = [-1] * g.n
    low = [0] * g.n
    state = {"time": 0, "cuts": 0}

    def walk(v: int, parent: int) -> None:
        disc[v] = low[v] = state["time"]
        state["time"] += 1
        children = 0
        for u in iter_bits(g.adj[v]):
            if disc[u] == -1:
                children += 1
                walk(u, v)
                low[v] = min(low[v], low[u])
                if parent != -1 and low[u] >= disc[v]:
                    state["cuts"] |= 1 << v
            elif u != parent:
                low[v] = min(low[v], disc[u])
        if parent == -1 and children > 1:
            state["cuts"] |= 1 << v

    walk(0, -1)
    return state["cuts"]


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given as its vertex sequence (closing edge implied)."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> str:
        return "even" if len(self.vertices) % 2 == 0 else "odd"

    def is_cycle_of(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i - 1], vs[i]) for i in range(len(vs)))


def _fundamental_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Fundamental cycles of a DFS forest, in back-edge discovery order.

    Each cycle is listed from the ancestor endpoint of its back edge down
    the tree path to the descendant endpoint.
    """
    parent = [-1] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    cycles: list[tuple[int, ...]] = []

    def walk(v: int) -> None:
        seen[v] = True
        for u in iter_bits(g.adj[v]):
            if not seen[u]:
                parent[u] = v
                depth[u] = depth[v] + 1
                walk(u)
            elif u != parent[v] and depth[u] < depth[v]:
                path = [v]
                t = v
                while t != u:
                    t = parent[t]
                    path.append(t)
                path.reverse()
                cycles.append(tuple(path))

    for root in range(g.n):
        if not seen[root]:
            walk(root)
    return cycles


def _cycle_edges(path: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    out = set()
    for i in range(len(path)):
        u, v = path[i - 1], path[i]
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


def _as_single_cycle(edges: frozenset[tuple[int, int]]) -> tuple[int, ...] | None:
    """Order an edge set into one simple cycle, or report that it is not one."""
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if any(len(vs) != 2 for vs in nbrs.values()):
        return None
    start = min(nbrs)
    walk = [start]
    prev, cur = -1, start
    while True:
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    if len(walk) != len(nbrs):
        return None
    return tuple(walk)


def find_even_cycle(g: Graph) -> Cycle | None:
    """An even-length cycle if the graph has one.

    Checks the DFS fundamental cycles first; when those are all odd, any
    even cycle must be the symmetric difference of two odd fundamental
    cycles that share an edge, so scanning the pairs is complete.
    """
    cycles = _fundamental_cycles(g)
    for path in cycles:
        if len(path) % 2 == 0:
            return Cycle(path)
    edge_sets = [_cycle_edges(path) for path in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if not edge_sets[i] & edge_sets[j]:
                continue
            walk = _as_single_cycle(edge_sets[i] ^ edge_sets[j])
            if walk is not None:
                return Cycle(walk)
    return None


def find_odd_cycle(g: Graph) -> Cycle | None:
    """An odd-length cycle if the graph has one (i.e. it is not bipartite)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return Cycle(_parent_path_cycle(parent, depth, v, u))
    return None


def _parent_path_cycle(parent: list[int], depth: list[int], u: int, v: int) -> tuple[int, ...]:
    """Close the tree paths of adjacent u, v through their lowest common ancestor."""
    up_u, up_v = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        up_u.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        up_v.append(b)
    while a != b:
        a = parent[a]
        up_u.append(a)
        b = parent[b]
        up_v.append(b)
    return tuple(up_u[:-1] + [a] + up_v[:-1][::-1])


def bipartition(g: Graph) -> tuple[int, int] | None:
    """2-coloring as (left, right) bitmasks, or None when an odd cycle exists.

    Per component, the side holding the component's lowest vertex goes left.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    left = mask_of(v for v in range(g.n) if color[v] == 0)
    return left, g.full ^ left


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on a nonempty vertex mask, plus the old->new index map."""
    if keep == 0:
        raise ValueError("induced subgraph needs at least one vertex")
    old = vertices_of(keep)
    vmap = {o: i for i, o in enumerate(old)}
    adj = []
    for o in old:
        row = 0
        for u in iter_bits(g.adj[o] & keep):
            row |= 1 << vmap[u]
        adj.append(row)
    return Graph(len(old), tuple(adj)), vmap


def condense_path(g: Graph, v: int, x: int, y: int) -> tuple[Graph, dict[int, int], int]:
    """Contract the induced path x - v - y into a single new vertex.

    v must have exactly the neighbors x and y.  The result keeps every other
    vertex (reindexed ascending), appends the replacement vertex last, and
    joins it to the surviving neighbors of x and y.  Dropping x and y from
    the replacement's neighborhood keeps the result simple.
    Returns (graph, old->new map for kept vertices, replacement index).
    """
    if g.adj[v] != (1 << x) | (1 << y) or x == y:
        raise ValueError(f"vertex {v} does not have exactly the neighbors {x} and {y}")
    drop = (1 << v) | (1 << x) | (1 << y)
    keep = g.full & ~drop
    attach = (g.adj[x] | g.adj[y]) & ~drop
    old = vertices_of(keep)
    vmap = {o: i for i, o in enumerate(old)}
    w = len(old)
    adj = []
    w_row = 0
    for o in old:
        row = 0
        for u in iter_bits(g.adj[o] & keep):
            row |= 1 << vmap[u]
        if attach >> o & 1:
            row |= 1 << w
            w_row |= 1 << vmap[o]
        adj.append(row)
    adj.append(w_row)
    return Graph(w + 1, tuple(adj)), vmap, w


# ---------------------------------------------------------------------------
# Named families, mostly for tests and documentation examples.


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)
