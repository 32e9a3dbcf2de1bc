"""Bag expansions: blow each vertex up into an independent bag whose
inter-bag adjacency copies the base graph exactly.

Copies of base vertex v occupy a contiguous index block, blocks ordered by
base index, so base<->copy translation is plain offset arithmetic. Two
copies in the same bag have identical neighborhoods in the expanded graph;
that is what lets holes of length at least five project back onto the base
without collapsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chordality import chordality
from .exceptions import BagCollisionError, EmptyBagError, HoleNotInducedError, HoleTooShortError
from .graphs import Graph, is_induced_cycle


@dataclass(frozen=True)
class BagExpansion:
    base: Graph
    bag_sizes: tuple[int, ...]
    expanded: Graph
    copy_to_base: tuple[int, ...]
    offsets: tuple[int, ...]

    def copies_of(self, v: int) -> range:
        """Expanded-graph indices of base vertex v's bag."""
        return range(self.offsets[v], self.offsets[v] + self.bag_sizes[v])

    def first_copies(self) -> list[int]:
        """One representative per bag; induces a copy of the base graph."""
        return [self.offsets[v] for v in range(self.base.n)]


def expand(base: Graph, bag_sizes: Sequence[int]) -> BagExpansion:
    """Expand every base vertex into a bag of the given positive size."""
    if len(bag_sizes) != base.n:
        raise ValueError("need one bag size per base vertex")
    if any(s < 1 for s in bag_sizes):
        raise EmptyBagError("every bag must have at least one vertex")
    offsets = [0] * base.n
    total = 0
    for v in range(base.n):
        offsets[v] = total
        total += bag_sizes[v]
    copy_to_base = [v for v in range(base.n) for _ in range(bag_sizes[v])]
    edges = [
        (x, y)
        for u, v in base.edges()
        for x in range(offsets[u], offsets[u] + bag_sizes[u])
        for y in range(offsets[v], offsets[v] + bag_sizes[v])
    ]
    return BagExpansion(
        base=base,
        bag_sizes=tuple(bag_sizes),
        expanded=Graph.from_edges(total, edges),
        copy_to_base=tuple(copy_to_base),
        offsets=tuple(offsets),
    )


def project_hole(exp: BagExpansion, hole: Sequence[int]) -> list[int]:
    """Map a hole of the expanded graph onto the base graph.

    Requires length >= 5: a 4-hole can consist of two same-bag copies plus
    two common neighbors and then has no base-graph image. From length 5 up,
    same-bag copies share neighborhoods, so an induced cycle never visits a
    bag twice and its image is an induced cycle of the same length.
    """
    if len(hole) < 5:
        raise HoleTooShortError(f"cannot project holes shorter than 5, got {len(hole)}")
    if not is_induced_cycle(exp.expanded, hole):
        raise HoleNotInducedError("input is not an induced cycle of the expanded graph")
    image = [exp.copy_to_base[x] for x in hole]
    if len(set(image)) != len(image):
        raise BagCollisionError("two hole vertices share a bag")
    if not is_induced_cycle(exp.base, image):
        raise HoleNotInducedError("projected image is not induced in the base graph")
    return image


def preserves_k_chordality_check(exp: BagExpansion, k: int) -> bool:
    """Test utility: does `base is k-chordal implies expanded is k-chordal`
    hold for this expansion? (k >= 4; always true mathematically.)"""
    if k < 4:
        raise ValueError(f"k must be >= 4, got {k}")
    if chordality(exp.base) > k:
        return True
    return chordality(exp.expanded) <= k
