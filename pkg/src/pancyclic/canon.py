"""Canonical forms: relabelling-invariant fingerprints that characterise isomorphism.

The canonical ordering is chosen by individualisation-refinement: vertices
are split by iterated neighbour counts into an equitable ordered partition,
ties are broken by branching, and among the resulting orderings the one
whose column-major upper triangle is lexicographically least wins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, to_graph6


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 bytes of the canonically relabelled graph.

    graph6 packs the upper triangle column-major, so byte order agrees with
    the bit-string order used to pick the canonical labelling.
    """

    fingerprint: bytes

    def graph(self) -> Graph:
        return Graph.from_graph6(self.fingerprint.decode("ascii"))

    def __str__(self) -> str:
        return self.fingerprint.decode("ascii")


def canonical_labeling(G: Graph) -> list[int]:
    """``lab[i]`` is the vertex placed at canonical position ``i``."""
    if G.order == 0:
        return []
    return [int(v) for v in _kernels.canon_label(G.to_array(), G.order)]


def canonical_graph(G: Graph) -> Graph:
    if G.order == 0:
        return G
    return Graph.from_array(_kernels.canonical_rows(G.to_array(), G.order))


def canonical_form(G: Graph) -> CanonicalForm:
    return CanonicalForm(to_graph6(canonical_graph(G)).encode("ascii"))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.order != H.order or G.size != H.size:
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_graph(G) == canonical_graph(H)


def canonical_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Canonical rows for a (K, n) stack of graphs."""
    return _kernels.canonical_rows_batch(np.ascontiguousarray(rows, dtype=np.int64), n)
