"""Join and corona product.

Labeling is deterministic: the first operand keeps its labels, the rest are
shifted after it. This keeps serialized products byte-stable.
"""
from __future__ import annotations

from .graph import Graph

__all__ = ["join", "corona"]


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    Vertices of ``g2`` are shifted by ``g1.n``.
    """
    n1, n2 = g1.n, g2.n
    right = frozenset(range(n1, n1 + n2))
    left = frozenset(range(n1))
    rows = [nbrs | right for nbrs in g1.adj]
    rows.extend(frozenset(u + n1 for u in nbrs) | left for nbrs in g2.adj)
    return Graph(n1 + n2, tuple(rows))


def corona(g: Graph, h: Graph) -> Graph:
    """Corona product: one copy of ``h`` per vertex ``i`` of ``g``, with ``i``
    adjacent to every vertex of its copy.

    Copy ``i`` occupies labels ``g.n + i*h.n`` .. ``g.n + (i+1)*h.n - 1`` in
    ``h``'s own vertex order. Not commutative.
    """
    n, k = g.n, h.n
    rows: list[frozenset[int]] = []
    for i, nbrs in enumerate(g.adj):
        base = n + i * k
        rows.append(nbrs | frozenset(range(base, base + k)))
    for i in range(n):
        base = n + i * k
        for nbrs in h.adj:
            rows.append(frozenset(u + base for u in nbrs) | {i})
    return Graph(n * (1 + k), tuple(rows))
