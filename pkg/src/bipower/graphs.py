"""Core graph representation and base algorithms.

Graphs are simple, undirected, and live on dense 0-indexed vertices; callers
keep their own label maps. Instances are immutable after construction, so
they are safe to share freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exceptions import NotBipartiteError, UnreachableError

# Sentinel distance for vertex pairs in different components.
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph as a tuple of per-vertex neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable; duplicates collapse silently."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def adjacency_masks(self) -> list[int]:
        """Neighbor sets as integer bitmasks, used by the search kernels."""
        return [sum(1 << u for u in nbrs) for nbrs in self.adj]


@dataclass(frozen=True)
class Bipartition:
    """Two-sided vertex partition with every edge crossing sides."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    def side_of(self, v: int) -> int:
        """0 for side_a, 1 for side_b."""
        if v in self.side_a:
            return 0
        if v in self.side_b:
            return 1
        raise KeyError(v)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from one source; UNREACHABLE for other components."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs hop distances; UNREACHABLE marks cross-component pairs."""
    return [bfs_distances(g, s) for s in range(g.n)]


def bipartition(g: Graph) -> Bipartition:
    """2-color by BFS; raises NotBipartiteError with an odd-cycle witness.

    Each component is rooted at its minimum-index vertex, which lands in
    side_a; isolated vertices therefore all land in side_a.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            x = q.popleft()
            for y in sorted(g.adj[x]):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    q.append(y)
                elif color[y] == color[x]:
                    raise NotBipartiteError(_odd_cycle_witness(parent, x, y))
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] != 0)
    return Bipartition(side_a, side_b)


def _odd_cycle_witness(parent: list[int], x: int, y: int) -> list[int]:
    """Close the x-y same-color edge through the BFS forest's lowest common
    ancestor; the resulting simple cycle has odd length."""
    ax, ay = [x], [y]
    seen = {x: 0}
    v = x
    while parent[v] != -1:
        v = parent[v]
        seen[v] = len(ax)
        ax.append(v)
    v = y
    while v not in seen:
        v = parent[v]
        ay.append(v)
    # ax up to the meeting point, then back down the y-branch (excluding it).
    return ax[: seen[v] + 1] + ay[-2::-1]


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on vertex set s, plus the new-index -> old-index map.

    New indices follow the sorted order of s, so the map is deterministic.
    """
    new_to_old = sorted(set(s))
    for v in new_to_old:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u in new_to_old
        for v in g.adj[u]
        if u < v and v in old_to_new
    ]
    return Graph.from_edges(len(new_to_old), edges), new_to_old


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    """True iff seq is a chordless cycle of g: distinct in-range vertices,
    cyclically consecutive ones adjacent, all other pairs non-adjacent.
    Malformed input yields False rather than an error."""
    k = len(seq)
    if k < 3:
        return False
    if any(not isinstance(v, int) or not 0 <= v < g.n for v in seq):
        return False
    if len(set(seq)) != k:
        return False
    for i in range(k):
        if not g.has_edge(seq[i], seq[(i + 1) % k]):
            return False
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(seq[i], seq[j]):
                return False
    return True


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """One shortest u-v path, deterministic under the lowest-index rule:
    reconstruct from v by repeatedly stepping to the smallest-index neighbor
    one BFS level closer to u."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"endpoint out of range for n={g.n}")
    dist = bfs_distances(g, u)
    if dist[v] == UNREACHABLE:
        raise UnreachableError(f"no path between {u} and {v}")
    path = [v]
    cur = v
    while cur != u:
        cur = min(w for w in g.adj[cur] if dist[w] == dist[cur] - 1)
        path.append(cur)
    path.reverse()
    return path
