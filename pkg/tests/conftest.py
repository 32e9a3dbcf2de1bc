"""Shared strategies and reference checkers, independent of the package's
own search paths wherever they serve as oracles."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from bipower import Graph


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def circulant(n: int, offsets: tuple[int, ...]) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if min((u - v) % n, (v - u) % n) in offsets
    ]
    return Graph.from_edges(n, edges)


def reference_is_induced_cycle(g: Graph, seq) -> bool:
    """Direct definition check examining every vertex pair."""
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    for i, j in combinations(range(k), 2):
        consecutive = (j - i == 1) or (i == 0 and j == k - 1)
        if g.has_edge(seq[i], seq[j]) != consecutive:
            return False
    return True


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return Graph.from_edges(n, edges)


@st.composite
def bipartite_graphs(draw, max_n: int = 9):
    n_a = draw(st.integers(min_value=1, max_value=max_n - 1))
    n_b = draw(st.integers(min_value=1, max_value=max_n - n_a))
    pairs = [(a, n_a + b) for a in range(n_a) for b in range(n_b)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph.from_edges(n_a + n_b, edges)
