"""Deterministic graph generators for tests and the fuzz harness.

All randomized generators take an explicit seed and drive a private
`random.Random`, so a (parameters, seed) pair always yields the same graph.
"""

from __future__ import annotations

import heapq
import random
from collections import deque

from .graphs import Graph


def gen_path(n: int) -> Graph:
    """Path on n >= 1 vertices, 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_even_cycle(n: int) -> Graph:
    """Cycle on n vertices; n must be even and >= 4."""
    if n < 4 or n % 2:
        raise ValueError(f"need even n >= 4, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A on 0..a-1 and side B on a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    return Graph.from_edges(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree on n >= 1 vertices via a random
    Pruefer sequence."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def gen_random_bipartite(
    n_a: int, n_b: int, edge_prob: float, seed: int, connect: bool = False
) -> Graph:
    """Bipartite Erdos-Renyi graph: side A on 0..n_a-1, side B after it,
    each cross pair independently an edge with probability edge_prob.

    With connect=True, cross edges are added along a random spanning order
    until the graph is connected (the result stays bipartite).
    """
    if n_a < 1 or n_b < 1:
        raise ValueError("both sides must be nonempty")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge probability out of [0, 1]: {edge_prob}")
    rng = random.Random(seed)
    n = n_a + n_b
    edges = [
        (a, b)
        for a in range(n_a)
        for b in range(n_a, n)
        if rng.random() < edge_prob
    ]
    if connect:
        edges.extend(_connecting_edges(n_a, n_b, edges, rng))
    return Graph.from_edges(n, edges)


def gen_random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """Plain Erdos-Renyi graph on n >= 0 vertices."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge probability out of [0, 1]: {edge_prob}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)


def _connecting_edges(
    n_a: int, n_b: int, edges: list[tuple[int, int]], rng: random.Random
) -> list[tuple[int, int]]:
    """Cross edges that join all components, chosen along a shuffled vertex
    order: each vertex in a new component links to a random already-visited
    vertex of the opposite side."""
    n = n_a + n_b
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)

    order = list(range(n))
    rng.shuffle(order)
    pending = deque(order)
    seen_a: list[int] = []
    seen_b: list[int] = []
    anchor: int | None = None
    extra: list[tuple[int, int]] = []
    while pending:
        v = pending.popleft()
        mine, opposite = (seen_a, seen_b) if v < n_a else (seen_b, seen_a)
        if anchor is None:
            anchor = v
            mine.append(v)
            continue
        if not opposite:
            # no cross partner visited yet; both sides are nonempty, so one
            # will be by the time this vertex cycles back
            pending.append(v)
            continue
        if find(v) != find(anchor):
            u = opposite[rng.randrange(len(opposite))]
            extra.append((min(u, v), max(u, v)))
            parent[find(u)] = find(v)
        mine.append(v)
    return extra
