"""Named graph families and the size threshold b(n).

Vertex numbering is fixed so that graph6 output is reproducible:

* ``bt(n)``: vertices ``0..n-2`` carry K_{p,q} with p = floor((n-1)/2),
  parts ``{0..p-1}`` and ``{p..n-2}``; the triangle apex ``n-1`` is joined
  to ``0`` and ``p``.
* ``gn(n)``: ``bt(n-1)`` (apex ``x = n-2``) plus ``y = n-1`` joined to ``x``
  and to every vertex of the larger part except the apex's neighbour.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph


def b_threshold(n: int) -> int:
    """floor((n-1)^2 / 4) + 2."""
    if n < 1:
        raise ValueError("b(n) is defined for n >= 1")
    return (n - 1) ** 2 // 4 + 2


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 0 or t < 0:
        raise ValueError("part sizes must be nonnegative")
    if s + t > MAX_ORDER:
        raise ValueError(f"order {s + t} exceeds {MAX_ORDER}")
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if k > MAX_ORDER:
        raise ValueError(f"order {k} exceeds {MAX_ORDER}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def bt(n: int) -> Graph:
    """K_{floor((n-1)/2), ceil((n-1)/2)} with one edge glued to a triangle."""
    if n < 5:
        raise ValueError("BT(n) is defined for n >= 5")
    p = (n - 1) // 2
    base = complete_bipartite(p, n - 1 - p)
    return base.add_vertex((0, p))


def bt_apex(n: int) -> int:
    return n - 1


def gn(n: int) -> Graph:
    """The order-n graph of size b(n) with exactly three weakly pancyclic vertices."""
    if n < 6:
        raise ValueError("G_n is defined for n >= 6")
    H = bt(n - 1)
    x = bt_apex(n - 1)
    p = (n - 2) // 2
    larger = [v for v in range(p, n - 2) if not H.has_edge(x, v)]
    return H.add_vertex([x] + larger)
