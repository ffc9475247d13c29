"""The color change rule and its closure.

A filled vertex with exactly one unfilled neighbor forces that neighbor to
fill.  Iterating until no force applies yields the derived set (closure),
which is independent of the order forces are applied in.  A set whose
closure covers the graph is a zero forcing set; a proper subset equal to
its own closure is stalled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph


@dataclass(frozen=True)
class ForcingTrace:
    """One run of the color change rule to its fixpoint.

    forces lists (forcer, forced) pairs in a valid chronology: repeated
    sweeps over filled vertices in ascending index order, applying each
    force the moment it is seen.
    """

    initial: int
    forces: tuple[tuple[int, int], ...]
    closure: int


def closure(g: Graph, filled: int) -> ForcingTrace:
    """Run the color change rule from a vertex mask, recording every force."""
    if filled & ~g.full:
        raise ValueError("initial set contains vertices outside the graph")
    adj = g.adj
    forces = []
    state = filled
    while True:
        progressed = False
        scan = state
        while scan:
            bit = scan & -scan
            scan ^= bit
            v = bit.bit_length() - 1
            unfilled = adj[v] & ~state
            if unfilled and not unfilled & (unfilled - 1):
                forces.append((v, unfilled.bit_length() - 1))
                state |= unfilled
                progressed = True
        if not progressed:
            return ForcingTrace(filled, tuple(forces), state)


def derived_set(g: Graph, filled: int) -> int:
    """Closure of a vertex mask, without the trace."""
    if filled & ~g.full:
        raise ValueError("initial set contains vertices outside the graph")
    return _derived(g.adj, g.full, filled)


def _derived(adj: tuple[int, ...], full: int, state: int) -> int:
    # Hot path: exact search and the census funnel through here.
    while True:
        done = True
        scan = state
        while scan:
            bit = scan & -scan
            scan ^= bit
            unfilled = adj[bit.bit_length() - 1] & ~state
            if unfilled and not unfilled & (unfilled - 1):
                state |= unfilled
                if state == full:
                    return full
                done = False
        if done:
            return state


def is_zero_forcing(g: Graph, filled: int) -> bool:
    """Does the mask force the whole graph?"""
    return derived_set(g, filled) == g.full


def is_stalled(g: Graph, filled: int) -> bool:
    """Is the mask a proper subset equal to its own closure?"""
    return filled != g.full and derived_set(g, filled) == filled


def spent_vertices(g: Graph, filled: int) -> int:
    """Mask of filled vertices whose whole neighborhood is filled."""
    spent = 0
    scan = filled
    while scan:
        bit = scan & -scan
        scan ^= bit
        if not g.adj[bit.bit_length() - 1] & ~filled:
            spent |= bit
    return spent
