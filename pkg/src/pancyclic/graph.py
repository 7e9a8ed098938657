"""Immutable simple graphs on at most 32 vertices.

Each vertex's neighbourhood is a Python ``int`` used as a bit vector, so
set operations are single machine-word operations once handed to numba.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 32


class Graph6Error(ValueError):
    """Raised for a malformed graph6 line."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with vertices ``0..order-1``.

    ``rows[i]`` has bit ``j`` set iff ``i`` and ``j`` are adjacent.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in [0, {MAX_ORDER}], got {n}")
        if len(self.rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside the vertex range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
                r ^= low

    # construction -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_array(cls, rows: Sequence[int], n: int | None = None) -> Graph:
        """Build from a row array such as the ones produced by the enumerator."""
        n = len(rows) if n is None else n
        return cls(n, tuple(int(r) for r in rows[:n]))

    # basic queries ----------------------------------------------------

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def min_degree(self) -> int:
        return min(self.degrees()) if self.order else 0

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    # derived graphs ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> Graph:
        n = self.order
        rows = list(self.rows) + [0]
        for u in neighbors:
            rows[u] |= 1 << n
            rows[n] |= 1 << u
        return Graph(n + 1, tuple(rows))

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        keep = [v for v in range(self.order) if v not in drop]
        return self.induced(keep)

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of the vertices")
        return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> Graph:
        full = (1 << self.order) - 1
        return Graph(self.order, tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    # interchange ------------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    @classmethod
    def from_graph6(cls, line: str) -> Graph:
        return from_graph6(line)

    def __repr__(self) -> str:
        return f"Graph({to_graph6(self)!r}, n={self.order}, m={self.size})"


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x``, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# graph6 -------------------------------------------------------------------


def to_graph6(G: Graph) -> str:
    n = G.order
    if n > 62:
        raise ValueError("graph6 headers above order 62 are not supported")
    out = [chr(63 + n)]
    acc = nbits = 0
    for j in range(1, n):
        row = G.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside the graph6 range in {s!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte graph6 headers (order > 62) are not supported")
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    payload = codes[1:]
    if len(payload) != (nbits + 5) // 6:
        raise Graph6Error(
            f"payload has {len(payload)} bytes, order {n} needs {(nbits + 5) // 6}"
        )
    pad = len(payload) * 6 - nbits
    if pad and payload[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# bipartition ---------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    part1: frozenset[int]
    part2: frozenset[int]

    @property
    def balanced(self) -> bool:
        a, b = sorted((len(self.part1), len(self.part2)))
        n = a + b
        return a == n // 2 and b == n - n // 2


def bipartition(G: Graph) -> Bipartition | None:
    """2-colour ``G`` by BFS, or return ``None`` if it has an odd cycle.

    Each component is rooted at its least vertex, which goes in ``part1``.
    """
    color = [-1] * G.order
    for root in range(G.order):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(G.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return Bipartition(
        frozenset(v for v in range(G.order) if color[v] == 0),
        frozenset(v for v in range(G.order) if color[v] == 1),
    )


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


# small / big vertices ------------------------------------------------------


class VertexTag(enum.Enum):
    SMALL = "small"
    BIG = "big"


@dataclass(frozen=True)
class VertexClass:
    tags: tuple[VertexTag, ...]
    threshold: int
    min_degree: int

    @property
    def small(self) -> frozenset[int]:
        return frozenset(v for v, t in enumerate(self.tags) if t is VertexTag.SMALL)

    @property
    def big(self) -> frozenset[int]:
        return frozenset(v for v, t in enumerate(self.tags) if t is VertexTag.BIG)


def small_threshold(n: int) -> int:
    """Largest degree of a small vertex in an order-``n`` graph."""
    return (n - 1) // 2


def classify_vertices(G: Graph) -> VertexClass:
    if G.order < 1:
        raise ValueError("classify_vertices needs at least one vertex")
    t = small_threshold(G.order)
    degs = G.degrees()
    tags = tuple(VertexTag.SMALL if d <= t else VertexTag.BIG for d in degs)
    return VertexClass(tags, t, min(degs))
