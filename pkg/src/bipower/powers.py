"""Graph powers and bipartite graph powers.

The m-th power connects distinct vertices at distance at most m. The m-th
bipartite power (m odd) connects vertices at odd distance at most m, which
keeps the graph bipartite with its original sides. Pairs in different
components never become edges.
"""

from __future__ import annotations

from .exceptions import EvenExponentError, InvalidExponentError
from .graphs import UNREACHABLE, Graph, bipartition, distance_matrix


def graph_power(g: Graph, m: int) -> Graph:
    """Edges between distinct vertices with distance <= m."""
    if m < 1:
        raise InvalidExponentError(f"exponent must be >= 1, got {m}")
    dist = distance_matrix(g)
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u][v] != UNREACHABLE and dist[u][v] <= m
    ]
    return Graph.from_edges(g.n, edges)


def bipartite_power(g: Graph, m: int) -> Graph:
    """Edges between vertices with odd distance <= m; requires bipartite g
    and odd m. The input's bipartition is preserved and g is a subgraph of
    the result (distance-1 pairs qualify)."""
    if m < 1:
        raise InvalidExponentError(f"exponent must be >= 1, got {m}")
    if m % 2 == 0:
        raise EvenExponentError(f"bipartite power exponent must be odd, got {m}")
    bipartition(g)  # raises NotBipartiteError with a witness
    dist = distance_matrix(g)
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u][v] != UNREACHABLE and dist[u][v] % 2 == 1 and dist[u][v] <= m
    ]
    return Graph.from_edges(g.n, edges)
