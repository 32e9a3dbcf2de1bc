"""Edge-list and DOT serialization.

Edge-list format: '#' comment lines anywhere, blank lines ignored, first
non-comment line is "n <count>", every following line "<u> <v>" with
0 <= u, v < count. The writer emits edges as "u v" with u < v in
lexicographic order, so read(write(g)) reproduces g exactly.
"""

from __future__ import annotations

from typing import Sequence

from .exceptions import ParseError
from .graphs import Graph


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format; duplicate edges collapse silently."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(line_no, f"expected 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise ParseError(line_no, f"negative vertex count {n}")
            continue
        if len(parts) != 2:
            raise ParseError(line_no, f"expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"endpoint out of range in {line!r}")
        if u == v:
            raise ParseError(line_no, f"self-loop at {u}")
        edges.append((u, v))
    if n is None:
        raise ParseError(0, "missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dot(
    g: Graph,
    highlight: Sequence[int] | None = None,
    positions: dict[int, tuple[float, float]] | None = None,
) -> str:
    """Serialize to Graphviz DOT, vertices labeled by index.

    `highlight` is a cyclic vertex sequence whose edges are drawn bold and
    red; `positions` pins vertices (layout hints for neato-style renderers).
    """
    marked: set[tuple[int, int]] = set()
    if highlight:
        k = len(highlight)
        for i in range(k):
            u, v = highlight[i], highlight[(i + 1) % k]
            marked.add((min(u, v), max(u, v)))
    lines = ["graph G {"]
    for v in range(g.n):
        if positions and v in positions:
            x, y = positions[v]
            lines.append(f'  {v} [pos="{x:.4f},{y:.4f}!"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        if (u, v) in marked:
            lines.append(f"  {u} -- {v} [color=red, penwidth=2];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
