"""Degree-pair edge partitions and direct-summation index values.

This is the ground truth every closed form is checked against: walk the
edges, look up the degrees of both ends, add the weight.
"""
from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache

from .errors import InvalidDegreeError
from .graph import Graph
from .radical import Radical, RadicalSum, normalize_radical

__all__ = [
    "IndexKind",
    "EdgeClassPartition",
    "edge_partition",
    "edge_weight",
    "index_exact",
    "index_float",
    "index_from_partition",
]


class IndexKind(str, enum.Enum):
    ESO = "eso"  # elliptic Sombor
    EU = "eu"  # Euler Sombor
    SO = "so"  # Sombor

    @classmethod
    def parse(cls, name: str) -> IndexKind:
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown index kind {name!r}; expected one of eso, eu, so") from None


# (a, b) with a <= b  ->  number of edges whose end degrees are {a, b}
EdgeClassPartition = dict[tuple[int, int], int]


def edge_partition(g: Graph) -> EdgeClassPartition:
    deg = [len(nbrs) for nbrs in g.adj]
    counts: Counter[tuple[int, int]] = Counter()
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        counts[(a, b) if a <= b else (b, a)] += 1
    return dict(sorted(counts.items()))


@lru_cache(maxsize=None)
def edge_weight(kind: IndexKind, a: int, b: int) -> Radical:
    """Contribution of one edge whose ends have degrees ``a`` and ``b``."""
    if a < 1 or b < 1:
        raise InvalidDegreeError(f"edge end degrees must be positive, got ({a}, {b})")
    kind = IndexKind(kind)
    if kind is IndexKind.ESO:
        return normalize_radical(a + b, a * a + b * b)
    if kind is IndexKind.EU:
        return normalize_radical(1, a * a + b * b + a * b)
    return normalize_radical(1, a * a + b * b)


def index_from_partition(partition: EdgeClassPartition, kind: IndexKind) -> RadicalSum:
    return RadicalSum.sum(
        RadicalSum.of(edge_weight(kind, a, b)) * count for (a, b), count in partition.items()
    )


def index_exact(g: Graph, kind: IndexKind) -> RadicalSum:
    """Exact index value by summing the weight of every edge.

    The partition-weighted total is computed too and must agree; a mismatch
    means the partition or the summation is broken, so it raises.
    """
    deg = [len(nbrs) for nbrs in g.adj]
    total = RadicalSum.sum(edge_weight(kind, deg[u], deg[v]) for u, v in g.edges())
    via_partition = index_from_partition(edge_partition(g), kind)
    if total != via_partition:
        raise AssertionError(
            f"edge sum {total} disagrees with partition sum {via_partition}"
        )
    return total


def index_float(g: Graph, kind: IndexKind) -> float:
    return float(index_exact(g, kind))
