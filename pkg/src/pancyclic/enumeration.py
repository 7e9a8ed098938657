"""Isomorphism-free generation of all graphs of a fixed order.

Generation walks down from K_n one edge at a time.  Every class H of size
m-1 has a canonical parent class H + e* (e* a non-edge picked by an
isomorphism-invariant rule), and H is produced only while expanding that
parent, once.  So the stratum of size m-1 is exactly the children of the
stratum of size m, with no global seen-set.  Because the acceptance test
is local to a parent, a stratum can be cut into shards and expanded by
independent workers; concatenating shard outputs in shard order gives the
same sequence as a serial run.

Only one stratum is held in memory at a time (about 1.4 million graphs at
order 10, the largest practical order).
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import _kernels
from .graph import Graph

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 12
SHARD_SIZE = 20000


@dataclass(frozen=True)
class EnumFilter:
    order: int
    size_min: int = 0
    size_max: int | None = None
    nonbipartite_only: bool = False
    connected_only: bool = False

    def __post_init__(self) -> None:
        n = self.order
        if not 0 <= n <= MAX_ENUM_ORDER:
            raise ValueError(f"exhaustive enumeration supports orders 0..{MAX_ENUM_ORDER}")
        top = n * (n - 1) // 2
        if self.size_max is None:
            object.__setattr__(self, "size_max", top)
        if not 0 <= self.size_min <= self.size_max <= top:
            raise ValueError(
                f"need 0 <= size_min <= size_max <= {top}, got {self.size_min}, {self.size_max}"
            )

    def accepts(self, rows: np.ndarray) -> np.ndarray:
        """Boolean mask over a stratum for the structural filters."""
        keep = np.ones(len(rows), dtype=bool)
        if len(rows) == 0:
            return keep
        if self.nonbipartite_only:
            keep &= ~_kernels.bipartite_batch(rows, self.order)
        if self.connected_only:
            keep &= _kernels.connected_batch(rows, self.order)
        return keep


def max_size(n: int) -> int:
    return n * (n - 1) // 2


def complete_stratum(n: int) -> np.ndarray:
    full = (1 << n) - 1
    return np.array([[full & ~(1 << i) for i in range(n)]], dtype=np.int64).reshape(1, n)


def _expand_shard(args: tuple[np.ndarray, int]) -> np.ndarray:
    rows, n = args
    return _kernels.expand(rows, n)[0]


def _shards(rows: np.ndarray, count: int) -> list[np.ndarray]:
    count = max(1, min(count, len(rows)))
    return np.array_split(rows, count)


def expand_stratum(rows: np.ndarray, n: int, pool: ProcessPoolExecutor | None = None,
                   jobs: int = 1) -> np.ndarray:
    """All classes one edge smaller than the classes in ``rows``."""
    if len(rows) == 0:
        return np.empty((0, n), np.int64)
    nshards = -(-len(rows) // SHARD_SIZE)
    if pool is not None:
        nshards = max(nshards, jobs)
    shards = _shards(rows, nshards)
    if pool is None:
        parts = [_expand_shard((s, n)) for s in shards]
    else:
        parts = list(pool.map(_expand_shard, [(s, n) for s in shards]))
    return np.concatenate(parts) if parts else np.empty((0, n), np.int64)


def iter_strata(
    n: int,
    size_min: int = 0,
    jobs: int = 1,
    start: tuple[int, np.ndarray] | None = None,
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(m, rows)`` for every size ``m`` from the top down to ``size_min``.

    ``rows`` holds every isomorphism class of order ``n`` and size ``m``, one
    canonically labelled graph per row.  With ``start=(m, rows)`` the walk
    resumes below a previously saved stratum instead of at K_n.
    """
    if not 0 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"exhaustive enumeration supports orders 0..{MAX_ENUM_ORDER}")
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        if start is None:
            m, level = max_size(n), complete_stratum(n)
            yield m, level
        else:
            m, level = start
        while m > size_min:
            level = expand_stratum(level, n, pool, jobs)
            m -= 1
            log.debug("order %d size %d: %d classes", n, m, len(level))
            yield m, level
    finally:
        if pool is not None:
            pool.shutdown()


def iter_filtered(filt: EnumFilter, jobs: int = 1) -> Iterator[tuple[int, np.ndarray]]:
    """Like :func:`iter_strata` but only strata in the size window, filtered."""
    for m, rows in iter_strata(filt.order, filt.size_min, jobs):
        if m > filt.size_max:
            continue
        yield m, rows[filt.accepts(rows)]


def iter_graphs(filt: EnumFilter, jobs: int = 1) -> Iterator[Graph]:
    for _, rows in iter_filtered(filt, jobs):
        for r in rows:
            yield Graph.from_array(r, filt.order)


def enumerate_graphs(filt: EnumFilter, visitor: Callable[[Graph], object], jobs: int = 1) -> int:
    """Call ``visitor`` once per isomorphism class passing ``filt``; return the count."""
    count = 0
    for G in iter_graphs(filt, jobs):
        visitor(G)
        count += 1
    return count


def count_classes(filt: EnumFilter, jobs: int = 1) -> int:
    return sum(len(rows) for _, rows in iter_filtered(filt, jobs))


def count_by_size(n: int, jobs: int = 1) -> dict[int, int]:
    """Number of isomorphism classes of order ``n`` at each size, ascending."""
    table = {m: len(rows) for m, rows in iter_strata(n, 0, jobs)}
    return dict(sorted(table.items()))
