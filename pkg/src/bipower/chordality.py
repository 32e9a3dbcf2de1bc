"""Exact hole (chordless cycle) search.

The main search grows induced paths by DFS: anchored at each vertex in
increasing order, it only extends through higher-indexed vertices, prunes
any extension adjacent to the path interior, and records a hole whenever an
extension closes back to the anchor. Exponential in the worst case, exact
always; meant for the small dense graphs that powers produce.

`chordality_oracle` is the independent cross-check: enumerate every vertex
subset and test whether it induces exactly a cycle.
"""

from __future__ import annotations

from .exceptions import GraphTooLargeError
from .graphs import Graph, bipartition

ORACLE_DEFAULT_CAP = 12


def largest_hole(g: Graph) -> list[int] | None:
    """A maximum-length induced cycle, or None when g is acyclic.

    Deterministic: anchors in increasing order, neighbors in increasing
    order, first hole of the maximum length wins.
    """
    best = _hole_search(g, stop_above=None)
    return best if best else None


def chordality(g: Graph) -> int:
    """Length of a largest hole; 0 when g has no cycle."""
    best = _hole_search(g, stop_above=None)
    return len(best)


def exists_hole_longer_than(g: Graph, k: int) -> list[int] | None:
    """First hole of length > k found by the pruned search, else None."""
    found = _hole_search(g, stop_above=k)
    return found if len(found) > k else None


def is_k_chordal(g: Graph, k: int) -> bool:
    """True iff g has no hole with more than k vertices; k must be >= 3."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    return exists_hole_longer_than(g, k) is None


def is_chordal_bipartite(g: Graph) -> bool:
    """True iff g is bipartite and 4-chordal."""
    try:
        bipartition(g)
    except ValueError:
        return False
    return is_k_chordal(g, 4)


def chordality_oracle(g: Graph, cap: int = ORACLE_DEFAULT_CAP) -> int:
    """Brute-force chordality: the largest vertex subset inducing a graph
    that is connected with all degrees exactly 2 (i.e. a single cycle).

    Independent of the DFS search above; refuses graphs above `cap`.
    """
    if g.n > cap:
        raise GraphTooLargeError(f"n={g.n} exceeds oracle cap {cap}")
    masks = g.adjacency_masks()
    best = 0
    for subset in range(1, 1 << g.n):
        size = subset.bit_count()
        if size < 3 or size <= best:
            continue
        if not _induces_cycle(masks, subset, size):
            continue
        best = size
    return best


def _induces_cycle(masks: list[int], subset: int, size: int) -> bool:
    members = []
    rest = subset
    while rest:
        bit = rest & -rest
        members.append(bit.bit_length() - 1)
        rest ^= bit
    if any((masks[v] & subset).bit_count() != 2 for v in members):
        return False
    # all degrees 2: a disjoint union of cycles; connectivity makes it one
    seen = 1 << members[0]
    frontier = [members[0]]
    while frontier:
        x = frontier.pop()
        nbrs = masks[x] & subset & ~seen
        while nbrs:
            bit = nbrs & -nbrs
            nbrs ^= bit
            seen |= bit
            frontier.append(bit.bit_length() - 1)
    return seen == subset


def _hole_search(g: Graph, stop_above: int | None) -> list[int]:
    """Shared DFS kernel. With stop_above=None returns the first hole of
    maximum length; otherwise returns as soon as some hole is longer than
    stop_above (the result may then be any such hole)."""
    masks = g.adjacency_masks()
    universe = (1 << g.n) - 1
    threshold = 0 if stop_above is None else stop_above
    best: list[int] = []

    for anchor in range(g.n):
        anchor_mask = masks[anchor]
        base_forbidden = (1 << (anchor + 1)) - 1

        def extend(path: list[int], forbidden: int) -> bool:
            # path is an induced path from the anchor; forbidden holds the
            # anchor prefix, path members, and neighbors of the interior.
            nonlocal best
            allowed = universe & ~forbidden
            if len(path) + allowed.bit_count() <= max(len(best), threshold):
                return False
            last = path[-1]
            cands = masks[last] & allowed
            while cands:
                bit = cands & -cands
                cands ^= bit
                if anchor_mask & bit:
                    # closes back to the anchor; never extend through such
                    # a vertex, the closing edge would chord anything longer
                    if len(path) + 1 > len(best):
                        best = path + [bit.bit_length() - 1]
                        if stop_above is not None and len(best) > stop_above:
                            return True
                else:
                    path.append(bit.bit_length() - 1)
                    stop = extend(path, forbidden | bit | masks[last])
                    path.pop()
                    if stop:
                        return True
            return False

        nbrs = anchor_mask & ~base_forbidden
        while nbrs:
            bit = nbrs & -nbrs
            nbrs ^= bit
            if extend([anchor, bit.bit_length() - 1], base_forbidden | bit):
                return best
    return best
