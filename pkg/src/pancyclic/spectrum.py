"""Exact cycle spectra and the pancyclicity predicates built on them.

All lengths are found by subset dynamic programming over simple paths, so
results are exact but memory grows as ``2**n``.  Graphs above
``MAX_DP_ORDER`` vertices are refused rather than silently thrashed.

Acyclic graphs have no girth or circumference; we then report *no*
weakly pancyclic vertex, edge or graph instead of taking the empty
interval as vacuously covered.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, bits

MAX_DP_ORDER = 24


def _check_order(G: Graph) -> None:
    if G.order > MAX_DP_ORDER:
        raise ValueError(
            f"exact cycle DP needs 2**n memory; order {G.order} exceeds {MAX_DP_ORDER}"
        )


def interval_mask(lo: int, hi: int) -> int:
    """Bitmask with bits ``lo..hi`` set (empty when ``lo > hi``)."""
    if lo > hi:
        return 0
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def _covers(mask: int, target: int) -> bool:
    return target != 0 and mask & target == target


@dataclass(frozen=True)
class CycleSpectrum:
    """Cycle lengths through each vertex, stored as bitmasks over lengths."""

    order: int
    vertex_masks: tuple[int, ...]

    @property
    def graph_mask(self) -> int:
        m = 0
        for vm in self.vertex_masks:
            m |= vm
        return m

    def vertex_lengths(self, v: int) -> frozenset[int]:
        return mask_to_set(self.vertex_masks[v])

    @property
    def graph_lengths(self) -> frozenset[int]:
        return mask_to_set(self.graph_mask)

    @property
    def girth(self) -> int | None:
        m = self.graph_mask
        return (m & -m).bit_length() - 1 if m else None

    @property
    def circumference(self) -> int | None:
        m = self.graph_mask
        return m.bit_length() - 1 if m else None

    @property
    def is_hamiltonian(self) -> bool:
        return self.order >= 3 and bool(self.graph_mask >> self.order & 1)

    @property
    def weak_target(self) -> int:
        """Mask of the lengths g(G)..c(G); 0 for an acyclic graph."""
        g, c = self.girth, self.circumference
        return 0 if g is None else interval_mask(g, c)

    @property
    def full_target(self) -> int:
        """Mask of the lengths 3..n."""
        return interval_mask(3, self.order)


def cycle_spectrum(G: Graph) -> CycleSpectrum:
    _check_order(G)
    if G.order == 0:
        return CycleSpectrum(0, ())
    vl = _kernels.vertex_lengths(G.to_array(), G.order)
    return CycleSpectrum(G.order, tuple(int(x) for x in vl))


def vertex_cycle_lengths(G: Graph, v: int) -> frozenset[int]:
    """Lengths of the cycles through ``v``, from a DP rooted at ``v`` alone."""
    _check_order(G)
    if not 0 <= v < G.order:
        raise ValueError(f"vertex {v} not in a graph of order {G.order}")
    return mask_to_set(int(_kernels.rooted_vertex_lengths(G.to_array(), G.order, v)))


def _path_masks(G: Graph, u: int) -> np.ndarray:
    return _kernels.path_lengths_from(G.to_array(), G.order, u)


def path_length_spectrum(G: Graph, u: int, w: int) -> frozenset[int]:
    """Lengths (in edges) of all ``(u, w)``-paths."""
    _check_order(G)
    if u == w:
        raise ValueError("path endpoints must be distinct")
    for x in (u, w):
        if not 0 <= x < G.order:
            raise ValueError(f"vertex {x} not in a graph of order {G.order}")
    return mask_to_set(int(_path_masks(G, u)[w]))


def _edge_mask_from_paths(path_mask: int) -> int:
    # an edge uw lies on an L-cycle iff a (u, w)-path of L-1 >= 2 edges exists
    return (path_mask >> 2) << 3


def edge_cycle_lengths(G: Graph, e: tuple[int, int]) -> frozenset[int]:
    u, w = e
    _check_order(G)
    if u == w or not (0 <= u < G.order and 0 <= w < G.order) or not G.has_edge(u, w):
        raise ValueError(f"{e} is not an edge of the graph")
    return mask_to_set(_edge_mask_from_paths(int(_path_masks(G, u)[w])))


def edge_masks(G: Graph) -> dict[tuple[int, int], int]:
    """Cycle-length mask of every edge ``(u, w)`` with ``u < w``."""
    _check_order(G)
    out = {}
    for u in range(G.order):
        later = G.rows[u] >> (u + 1)
        if not later:
            continue
        pm = _path_masks(G, u)
        for j in bits(later):
            w = u + 1 + j
            out[(u, w)] = _edge_mask_from_paths(int(pm[w]))
    return out


@dataclass(frozen=True)
class PancyclicityReport:
    spectrum: CycleSpectrum
    pancyclic_vertices: frozenset[int]
    weakly_pancyclic_vertices: frozenset[int]
    pancyclic_edges: frozenset[tuple[int, int]]
    weakly_pancyclic_edges: frozenset[tuple[int, int]]
    graph_pancyclic: bool
    graph_weakly_pancyclic: bool

    @property
    def girth(self) -> int | None:
        return self.spectrum.girth

    @property
    def circumference(self) -> int | None:
        return self.spectrum.circumference


def classify_pancyclicity(G: Graph, edges: bool = True) -> PancyclicityReport:
    """Classify every vertex (and, unless ``edges=False``, every edge)."""
    spec = cycle_spectrum(G)
    weak, full = spec.weak_target, spec.full_target
    if spec.graph_mask == 0:
        full = 0
    vm = spec.vertex_masks
    pv = frozenset(v for v in range(G.order) if _covers(vm[v], full))
    wv = frozenset(v for v in range(G.order) if _covers(vm[v], weak))
    pe: frozenset[tuple[int, int]] = frozenset()
    we: frozenset[tuple[int, int]] = frozenset()
    if edges and spec.graph_mask:
        em = edge_masks(G)
        pe = frozenset(e for e, m in em.items() if _covers(m, full))
        we = frozenset(e for e, m in em.items() if _covers(m, weak))
    gm = spec.graph_mask
    return PancyclicityReport(
        spectrum=spec,
        pancyclic_vertices=pv,
        weakly_pancyclic_vertices=wv,
        pancyclic_edges=pe,
        weakly_pancyclic_edges=we,
        graph_pancyclic=_covers(gm, full),
        graph_weakly_pancyclic=_covers(gm, weak),
    )


# batch helpers used by the exhaustive harness --------------------------------


@dataclass
class BatchSpectra:
    """Spectra of a stack of same-order graphs, as numpy arrays."""

    vertex_masks: np.ndarray  # (K, n)
    graph_masks: np.ndarray  # (K,)
    girth: np.ndarray  # 0 where acyclic
    circumference: np.ndarray  # 0 where acyclic
    weak_target: np.ndarray
    full_target: int

    def weak_counts(self) -> np.ndarray:
        t = self.weak_target[:, None]
        hit = (self.vertex_masks & t) == t
        hit &= (self.weak_target != 0)[:, None]
        return hit.sum(axis=1)

    def pancyclic_counts(self) -> np.ndarray:
        t = self.full_target
        hit = (self.vertex_masks & t) == t
        hit &= (self.graph_masks != 0)[:, None]
        return hit.sum(axis=1)


def _low_bit(x: np.ndarray) -> np.ndarray:
    out = np.zeros(x.shape, np.int64)
    nz = x != 0
    out[nz] = np.log2(x[nz] & -x[nz]).astype(np.int64)
    return out


def _high_bit(x: np.ndarray) -> np.ndarray:
    out = np.zeros(x.shape, np.int64)
    nz = x != 0
    out[nz] = np.frexp(x[nz].astype(np.float64))[1] - 1
    return out


def batch_spectra(rows: np.ndarray, n: int) -> BatchSpectra:
    if n > MAX_DP_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_DP_ORDER}")
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if n == 0 or len(rows) == 0:
        z = np.zeros(len(rows), np.int64)
        return BatchSpectra(np.zeros((len(rows), n), np.int64), z, z, z, z, 0)
    vm = _kernels.vertex_lengths_batch(rows, n)
    gm = np.bitwise_or.reduce(vm, axis=1)
    g = _low_bit(gm)
    c = _high_bit(gm)
    weak = np.where(gm != 0, ((np.int64(1) << (c + 1)) - 1) ^ ((np.int64(1) << g) - 1), 0)
    return BatchSpectra(vm, gm, g, c, weak, interval_mask(3, n))


def pancyclic_edge_stats(
    rows: np.ndarray, n: int, spectra: BatchSpectra
) -> tuple[np.ndarray, np.ndarray]:
    """Pancyclic-edge count per graph, and how many of those edges have an
    endpoint that is not a pancyclic vertex (always zero in theory)."""
    return _kernels.pancyclic_edge_stats_batch(
        np.ascontiguousarray(rows, dtype=np.int64), n, spectra.vertex_masks, spectra.full_target
    )
