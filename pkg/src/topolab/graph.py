"""Undirected simple graphs on dense 0-based vertex labels.

Graphs are immutable: the adjacency is a tuple of frozensets, validated once
at construction. The edge-list text format is a header ``"n m"`` followed by
``m`` lines ``"u v"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphParseError, InvalidParameterError

__all__ = [
    "Graph",
    "make_path",
    "make_cycle",
    "make_complete",
    "degree_sequence",
    "parse_graph",
    "serialize_graph",
    "relabel",
]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameterError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise InvalidParameterError(
                f"adjacency has {len(self.adj)} rows for {self.n} vertices"
            )
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise InvalidParameterError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InvalidParameterError(f"neighbor label {u} of vertex {v} out of range")
                if v not in self.adj[u]:
                    raise InvalidParameterError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) has a label outside [0, {n})")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    # C_1 and C_2 would need a loop or a double edge
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple(frozenset(u for u in range(n) if u != v) for v in range(n)))


def degree_sequence(g: Graph) -> list[int]:
    return [len(nbrs) for nbrs in g.adj]


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the isomorphic graph in which vertex ``v`` is renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidParameterError("perm must be a permutation of range(n)")
    rows: list[frozenset[int]] = [frozenset()] * g.n
    for v, nbrs in enumerate(g.adj):
        rows[perm[v]] = frozenset(perm[u] for u in nbrs)
    return Graph(g.n, tuple(rows))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


def _ints(line: str, lineno: int, source: str | None) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphParseError(f"expected two integers, got {line!r}", lineno, source)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"expected two integers, got {line!r}", lineno, source) from None
    return a, b


def parse_graph(text: str, source: str | None = None) -> Graph:
    """Parse an edge-list document.

    Blank trailing lines are tolerated; everything else (duplicate edges,
    self-loops, labels outside ``[0, n)``, wrong edge count, malformed
    lines) raises :class:`GraphParseError` carrying the 1-based line number.
    """
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphParseError("empty document, expected header 'n m'", 1, source)
    n, m = _ints(lines[0], 1, source)
    if n < 0 or m < 0:
        raise GraphParseError(f"negative count in header {lines[0]!r}", 1, source)
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(
            f"header declares {m} edges but {len(body)} edge lines follow",
            len(lines), source,
        )
    rows: list[set[int]] = [set() for _ in range(n)]
    for lineno, line in enumerate(body, start=2):
        u, v = _ints(line, lineno, source)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"label out of range [0, {n}) in {line!r}", lineno, source)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno, source)
        if v in rows[u]:
            raise GraphParseError(f"duplicate edge {min(u, v)} {max(u, v)}", lineno, source)
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n, tuple(frozenset(r) for r in rows))
