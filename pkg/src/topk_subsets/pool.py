"""Double-ended candidate pool with exact instrumentation.

One structure serves every enumeration variant: candidates go in with a
sum key, the smallest comes out through :meth:`BoundedPool.extract_min`,
and when only ``m`` more answers can ever be needed the largest entries
are discarded through :meth:`BoundedPool.prune_max`.  Equal keys resolve
by insertion order on the min side and reverse insertion order on the
max side, so results are fully deterministic.

Internally this is a pair of stdlib binary heaps over shared entry
records with a liveness flag.  Removing an entry on one side merely
flips the flag; the stale twin is skipped when it surfaces on the other
heap (lazy tombstones).  The metrics counters track logical entries
only, never tombstone pops.  Instances are single-threaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Any, Optional

__all__ = ["RunMetrics", "BoundedPool"]


@dataclass
class RunMetrics:
    """Counters for one enumeration run.

    ``total_insertions`` counts every insert ever made, ``peak_size`` the
    largest logical size reached, and ``elapsed_ns`` the wall time of the
    enumeration itself (no input parsing, no output formatting).  The
    live size of a pool is always ``total_insertions - extractions -
    prunes``.
    """

    total_insertions: int = 0
    peak_size: int = 0
    extractions: int = 0
    prunes: int = 0
    elapsed_ns: int = 0


# Entry layout: [key, seq, item, alive].  heapq compares lists
# element-wise and seq is unique, so items are never compared.
_KEY, _SEQ, _ITEM, _ALIVE = range(4)


class BoundedPool:
    """Min-extraction priority pool with max-side pruning.

    ``metrics`` may be shared with the caller; counters are updated in
    place.  When ``log`` is a list, every mutating operation appends a
    ``(op, key, seq)`` record, which the tests replay to confirm the
    counters are exact.
    """

    __slots__ = ("_min", "_max", "_size", "_seq", "metrics", "_log")

    def __init__(
        self,
        metrics: Optional[RunMetrics] = None,
        log: "Optional[list[tuple[str, Any, int]]]" = None,
    ) -> None:
        self._min: list = []
        self._max: list = []
        self._size = 0
        self._seq = 0
        self.metrics = metrics if metrics is not None else RunMetrics()
        self._log = log

    def __len__(self) -> int:
        return self._size

    def insert(self, item: Any, key) -> list:
        """Add an item under a sum key; returns an opaque handle."""
        seq = self._seq
        self._seq = seq + 1
        entry = [key, seq, item, True]
        heappush(self._min, entry)
        heappush(self._max, (-key, -seq, entry))
        size = self._size + 1
        self._size = size
        m = self.metrics
        m.total_insertions += 1
        if size > m.peak_size:
            m.peak_size = size
        if self._log is not None:
            self._log.append(("insert", key, seq))
        return entry

    def extract_min(self) -> Any:
        """Remove and return the item with the smallest (key, seq)."""
        if self._size == 0:
            raise IndexError("extract_min on an empty pool")
        h = self._min
        while True:
            entry = heappop(h)
            if entry[_ALIVE]:
                break
        entry[_ALIVE] = False
        self._size -= 1
        self.metrics.extractions += 1
        if self._log is not None:
            self._log.append(("extract", entry[_KEY], entry[_SEQ]))
        return entry[_ITEM]

    def prune_max(self) -> Any:
        """Remove and return the item with the largest (key, seq)."""
        if self._size == 0:
            raise IndexError("prune_max on an empty pool")
        h = self._max
        while True:
            _, _, entry = heappop(h)
            if entry[_ALIVE]:
                break
        entry[_ALIVE] = False
        self._size -= 1
        self.metrics.prunes += 1
        if self._log is not None:
            self._log.append(("prune", entry[_KEY], entry[_SEQ]))
        return entry[_ITEM]
