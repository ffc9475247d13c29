import random

import pytest

from zeroforcing import Graph, from_edges


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


@pytest.fixture(scope="session")
def census_n8():
    """One full run shared by every test that reads the n <= 8 tables."""
    from zeroforcing import run_census

    return run_census(max_n=8, k_max=4, jobs=8)
