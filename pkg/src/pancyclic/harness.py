"""Exhaustive checks of the weak-pancyclicity results on all small graphs.

Each verifier streams the size strata of the isomorphism-free enumeration
through batched spectrum kernels and collects graph6 counterexamples.
Reports merge by summing counts and concatenating witness lists.
"""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from . import _kernels
from .canon import are_isomorphic, canonical_graph, canonical_rows
from .constructions import b_threshold, bt, gn
from .enumeration import iter_strata
from .graph import Graph, bipartition, small_threshold, to_graph6
from .spectrum import batch_spectra, classify_pancyclicity, pancyclic_edge_stats

log = logging.getLogger(__name__)

MAX_HARNESS_ORDER = 10
LEMMA7_EXHAUSTIVE_K = 4


def _g6(row: np.ndarray, n: int) -> str:
    return to_graph6(Graph.from_array(row, n))


def _nonbipartite(rows: np.ndarray, n: int) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros(0, dtype=bool)
    return ~_kernels.bipartite_batch(rows, n)


@dataclass
class VerificationReport:
    claim: str
    n: int
    scanned: int = 0
    in_hypothesis: int = 0
    counterexamples: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)
    asserted: bool = True

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: VerificationReport) -> VerificationReport:
        if (self.claim, self.n) != (other.claim, other.n):
            raise ValueError("can only merge reports of the same claim and order")
        return VerificationReport(
            self.claim,
            self.n,
            self.scanned + other.scanned,
            self.in_hypothesis + other.in_hypothesis,
            self.counterexamples + other.counterexamples,
            max(self.elapsed, other.elapsed),
            {**self.details, **other.details},
            self.asserted,
        )

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "claim": self.claim,
            "n": self.n,
            "scanned": self.scanned,
            "in_hypothesis": self.in_hypothesis,
            "counterexamples": sorted(self.counterexamples),
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class ExtremalRecord:
    n: int
    f_value: int
    witnesses: list[str]
    b_value: int
    scanned: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "claim": "search-f",
            "n": self.n,
            "f": self.f_value,
            "b": self.b_value,
            "witnesses": self.witnesses,
            "scanned": self.scanned,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


def _require(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise ValueError(f"{what} is checked for {lo} <= n <= {hi}, got {n}")


def _scan_dense_nonbipartite(n: int, jobs: int):
    """Yield (m, stratum size, nonbipartite rows, their spectra) for sizes >= b(n)."""
    for m, rows in iter_strata(n, b_threshold(n), jobs):
        if m < b_threshold(n):
            break
        keep = rows[_nonbipartite(rows, n)]
        yield m, len(rows), keep, batch_spectra(keep, n)


def verify_theorem1(n: int, jobs: int = 1) -> VerificationReport:
    """Hamiltonian nonbipartite graphs with at least b(n) edges are pancyclic."""
    _require(n, 5, MAX_HARNESS_ORDER, "theorem 1")
    t0 = time.perf_counter()
    rep = VerificationReport("thm1", n)
    for _, total, rows, sp in _scan_dense_nonbipartite(n, jobs):
        rep.scanned += total
        ham = sp.circumference == n
        rep.in_hypothesis += int(ham.sum())
        t = sp.full_target
        bad = ham & ((sp.graph_masks & t) != t)
        rep.counterexamples += [_g6(r, n) for r in rows[bad]]
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_theorem2(n: int, jobs: int = 1) -> VerificationReport:
    """Nonbipartite graphs with at least b(n) edges are weakly pancyclic with girth 3."""
    _require(n, 3, MAX_HARNESS_ORDER, "theorem 2")
    t0 = time.perf_counter()
    rep = VerificationReport("thm2", n)
    girth_bad = 0
    for _, total, rows, sp in _scan_dense_nonbipartite(n, jobs):
        rep.scanned += total
        rep.in_hypothesis += len(rows)
        t = sp.weak_target
        not_weak = (sp.graph_masks & t) != t
        not_tri = sp.girth != 3
        girth_bad += int(not_tri.sum())
        rep.counterexamples += [_g6(r, n) for r in rows[not_weak | not_tri]]
    rep.details["girth_not_3"] = girth_bad
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_theorem3(n: int, jobs: int = 1) -> VerificationReport:
    """At least three weakly pancyclic vertices, except BT(n) which has exactly two."""
    _require(n, 5, MAX_HARNESS_ORDER, "theorem 3")
    t0 = time.perf_counter()
    rep = VerificationReport("thm3", n)
    bt_rows = np.array(canonical_graph(bt(n)).rows, dtype=np.int64)
    bt_seen = 0
    bt_wp = None
    for _, total, rows, sp in _scan_dense_nonbipartite(n, jobs):
        rep.scanned += total
        rep.in_hypothesis += len(rows)
        wp = sp.weak_counts()
        is_bt = (rows == bt_rows).all(axis=1) if len(rows) else np.zeros(0, bool)
        bt_seen += int(is_bt.sum())
        if is_bt.any():
            bt_wp = int(wp[is_bt][0])
        bad = np.where(is_bt, wp != 2, wp < 3)
        rep.counterexamples += [_g6(r, n) for r in rows[bad]]
    rep.details["bt_found"] = bt_seen == 1
    rep.details["bt_weakly_pancyclic_vertices"] = bt_wp
    if bt_seen != 1:
        rep.counterexamples.append(to_graph6(bt(n)))
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_theorem4(n: int) -> VerificationReport:
    """G_n: order n, size b(n), nonbipartite, not BT(n), exactly three weakly pancyclic vertices."""
    _require(n, 6, 14, "theorem 4")
    t0 = time.perf_counter()
    G = gn(n)
    rep = VerificationReport("thm4", n, scanned=1, in_hypothesis=1)
    wp = classify_pancyclicity(G, edges=False).weakly_pancyclic_vertices
    checks = {
        "order": G.order == n,
        "size": G.size == b_threshold(n),
        "nonbipartite": bipartition(G) is None,
        "not_bt": not are_isomorphic(G, bt(n)),
        "three_weakly_pancyclic": len(wp) == 3,
    }
    rep.details = {**checks, "weakly_pancyclic_vertices": sorted(wp)}
    if not all(checks.values()):
        rep.counterexamples.append(to_graph6(G))
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_lemma5(n: int, jobs: int = 1) -> VerificationReport:
    """Off every longest cycle of a nonhamiltonian graph lies a small vertex.

    The conclusion depends only on the vertex set of the cycle, so the
    check runs over all vertex sets spanning a longest cycle.
    """
    _require(n, 3, MAX_HARNESS_ORDER, "lemma 5")
    t0 = time.perf_counter()
    rep = VerificationReport("lemma5", n)
    longest = 0
    for _, rows in iter_strata(n, 0, jobs):
        rep.scanned += len(rows)
        sp = batch_spectra(rows, n)
        hyp = (sp.graph_masks != 0) & (sp.circumference < n)
        rows = rows[hyp]
        rep.in_hypothesis += len(rows)
        if not len(rows):
            continue
        total, bad = _kernels.longest_cycle_sets_batch(
            rows, n, sp.circumference[hyp], small_threshold(n)
        )
        longest += int(total.sum())
        rep.counterexamples += [_g6(r, n) for r in rows[bad > 0]]
    rep.details["longest_cycle_vertex_sets"] = longest
    rep.elapsed = time.perf_counter() - t0
    return rep


def _lemma7_rows(rows: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Keep balanced bipartite graphs; return them with one side as a mask."""
    n = 2 * k
    keep, parts = [], []
    for r in rows:
        bp = bipartition(Graph.from_array(r, n))
        if bp is not None and len(bp.part1) == k:
            keep.append(r)
            parts.append(sum(1 << v for v in bp.part1))
    return np.array(keep, dtype=np.int64).reshape(-1, n), np.array(parts, dtype=np.int64)


def random_dense_balanced_bipartite(k: int, count: int, seed: int = 0) -> np.ndarray:
    """K_{k,k} minus a uniformly random number (0..k-2) of random edges."""
    rng = np.random.default_rng(seed)
    n = 2 * k
    cross = [(i, k + j) for i in range(k) for j in range(k)]
    out = np.empty((count, n), np.int64)
    for s in range(count):
        drop = rng.choice(len(cross), size=int(rng.integers(0, k - 1)), replace=False)
        dropped = {cross[d] for d in drop}
        G = Graph.from_edges(n, (e for e in cross if e not in dropped))
        out[s] = G.rows
    return out


def verify_lemma7(k: int, samples: int | None = None, seed: int = 0, jobs: int = 1) -> VerificationReport:
    """Path lengths in dense balanced bipartite graphs of order 2k.

    Exhaustive over isomorphism classes for k <= 4; random samples above.
    """
    if k < 2:
        raise ValueError("lemma 7 needs k >= 2")
    t0 = time.perf_counter()
    n = 2 * k
    floor = k * k - k + 2
    rep = VerificationReport("lemma7", k)
    if samples is None and k <= LEMMA7_EXHAUSTIVE_K:
        for m, rows in iter_strata(n, floor, jobs):
            rep.scanned += len(rows)
            hyp, parts = _lemma7_rows(rows, k)
            rep.in_hypothesis += len(hyp)
            if len(hyp):
                fails = _kernels.bipartite_path_failures_batch(hyp, n, parts)
                rep.counterexamples += [_g6(r, n) for r in hyp[fails > 0]]
        rep.details["mode"] = "exhaustive"
    else:
        count = 10_000 if samples is None else samples
        rows = random_dense_balanced_bipartite(k, count, seed)
        # samples repeat heavily up to isomorphism; check each class once
        classes = np.unique(canonical_rows(rows, n), axis=0)
        hyp, parts = _lemma7_rows(classes, k)
        fails = _kernels.bipartite_path_failures_batch(hyp, n, parts)
        rep.scanned = rep.in_hypothesis = count
        rep.counterexamples = [_g6(r, n) for r in hyp[fails > 0]]
        rep.details["classes"] = len(classes)
        rep.details.update(mode="random", seed=seed)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _save_checkpoint(path: Path, n: int, m: int, rows: np.ndarray, scanned: int) -> None:
    path.mkdir(parents=True, exist_ok=True)
    tmp = path / "stratum.tmp.npy"
    np.save(tmp, rows)
    os.replace(tmp, path / "stratum.npy")
    state = {"n": n, "m": m, "scanned": scanned, "classes": len(rows)}
    tmp = path / "state.tmp.json"
    tmp.write_text(json.dumps(state))
    os.replace(tmp, path / "state.json")


def _load_checkpoint(path: Path, n: int) -> tuple[int, np.ndarray, int] | None:
    state_file = path / "state.json"
    if not state_file.exists():
        return None
    state = json.loads(state_file.read_text())
    if state["n"] != n:
        raise ValueError(f"checkpoint in {path} is for order {state['n']}, not {n}")
    rows = np.load(path / "stratum.npy")
    if len(rows) != state["classes"]:
        raise ValueError(f"checkpoint in {path} is inconsistent")
    return state["m"], rows, state["scanned"]


def compute_f(n: int, jobs: int = 1, resume_dir: str | os.PathLike | None = None) -> ExtremalRecord:
    """Smallest k such that every nonbipartite order-n graph with >= k edges
    has a weakly pancyclic vertex.

    Sizes are scanned downward from n(n-1)/2; the first size with a
    nonbipartite graph lacking weakly pancyclic vertices is f(n) - 1.  If no
    such graph exists at any size, f(n) is reported as 0.
    """
    _require(n, 3, MAX_HARNESS_ORDER, "f(n)")
    t0 = time.perf_counter()
    ckpt = Path(resume_dir) if resume_dir is not None else None
    start = None
    scanned = 0
    if ckpt is not None:
        loaded = _load_checkpoint(ckpt, n)
        if loaded is not None:
            m, rows, scanned = loaded
            start = (m, rows)
            log.info("resuming order %d below size %d (%d classes)", n, m, len(rows))
    for m, rows in iter_strata(n, 0, jobs, start):
        keep = rows[_nonbipartite(rows, n)]
        scanned += len(keep)
        sp = batch_spectra(keep, n)
        free = (sp.weak_counts() == 0) & (sp.graph_masks != 0)
        log.info("order %d size %d: %d nonbipartite, %d without WP vertex",
                 n, m, len(keep), int(free.sum()))
        if free.any():
            witnesses = sorted(_g6(r, n) for r in keep[free])
            return ExtremalRecord(n, m + 1, witnesses, b_threshold(n), scanned,
                                  time.perf_counter() - t0)
        if ckpt is not None:
            _save_checkpoint(ckpt, n, m, rows, scanned)
    return ExtremalRecord(n, 0, [], b_threshold(n), scanned, time.perf_counter() - t0)


def scan_conjecture1(n: int, jobs: int = 1) -> VerificationReport:
    """Look for dense hamiltonian nonbipartite graphs without a pancyclic edge.

    Conjecture counterexamples are reported, not asserted.  The asserted
    part is that both ends of every pancyclic edge are pancyclic vertices;
    violations are listed under ``details['endpoint_violations']``.
    """
    _require(n, 7, MAX_HARNESS_ORDER, "conjecture 1")
    t0 = time.perf_counter()
    rep = VerificationReport("conjecture1", n, asserted=False)
    bt_rows = np.array(canonical_graph(bt(n)).rows, dtype=np.int64)
    violations: list[str] = []
    excluded = 0
    for _, total, rows, sp in _scan_dense_nonbipartite(n, jobs):
        rep.scanned += total
        hyp = sp.circumference == n
        if n % 2 == 1 and len(rows):
            is_bt = (rows == bt_rows).all(axis=1)
            excluded += int((hyp & is_bt).sum())
            hyp &= ~is_bt
        rows = rows[hyp]
        rep.in_hypothesis += len(rows)
        if not len(rows):
            continue
        sub = batch_spectra(rows, n)
        edges, bad_ends = pancyclic_edge_stats(rows, n, sub)
        few_vertices = (edges > 0) & (sub.pancyclic_counts() < 2)
        violations += [_g6(r, n) for r in rows[(bad_ends > 0) | few_vertices]]
        rep.counterexamples += [_g6(r, n) for r in rows[edges == 0]]
    rep.details = {"bt_excluded": excluded, "endpoint_violations": violations}
    rep.elapsed = time.perf_counter() - t0
    return rep


VERIFIERS = {
    "thm1": verify_theorem1,
    "thm2": verify_theorem2,
    "thm3": verify_theorem3,
    "lemma5": verify_lemma5,
}


def recheck_no_weak_vertex(g6: str) -> bool:
    """True iff the graph is nonbipartite and has no weakly pancyclic vertex."""
    G = Graph.from_graph6(g6)
    rep = classify_pancyclicity(G, edges=False)
    return bipartition(G) is None and not rep.weakly_pancyclic_vertices


__all__ = [
    "ExtremalRecord",
    "VerificationReport",
    "compute_f",
    "random_dense_balanced_bipartite",
    "recheck_no_weak_vertex",
    "scan_conjecture1",
    "verify_lemma5",
    "verify_lemma7",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
]
