"""DOT (Graphviz) rendering of frame fragments.

Nodes are worlds labelled with their point syntax; each relation base is
drawn with its own edge style (base 0 dashed, base 1 solid, then dotted,
bold, cycling).  By default only covering edges are drawn — the relations
are transitive, so the full edge set obscures the picture; pass full=True
to draw every related pair.
"""

from __future__ import annotations

from tsc.oracle import _point_key
from tsc.semantics import Point, r_n

_EDGE_STYLES = ["dashed", "solid", "dotted", "bold"]


def _covering_edges(edges: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Transitive reduction of a finite transitive irreflexive relation."""
    by_source: dict[int, set[int]] = {}
    for i, j in edges:
        by_source.setdefault(i, set()).add(j)
    return {
        (i, j)
        for i, j in edges
        if not any((k, j) in edges for k in by_source.get(i, ()))
    }


def frame_dot(points: list[Point], bases: list[int], *, full: bool = False) -> str:
    """Render the fragment and its relations at the given bases as DOT text."""
    worlds = sorted(set(points), key=_point_key)
    lines = ["digraph frame {", "  node [shape=box];"]
    for i, x in enumerate(worlds):
        lines.append(f'  n{i} [label="{x}"];')
    for base in bases:
        edges = {
            (i, j)
            for i, x in enumerate(worlds)
            for j, y in enumerate(worlds)
            if i != j and r_n(x, y, base)
        }
        if not full:
            edges = _covering_edges(edges)
        style = _EDGE_STYLES[base % len(_EDGE_STYLES)]
        for i, j in sorted(edges):
            lines.append(f"  n{i} -> n{j} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
