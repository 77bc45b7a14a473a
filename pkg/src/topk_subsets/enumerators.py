"""Four interchangeable streaming top-k enumerators.

All variants pop candidates from a :class:`BoundedPool` in best-first
order and emit :class:`RankedSubset` records lazily, one per extraction,
so consuming q items never does the work of q+1.  They differ in what a
frontier node carries and which successor rule feeds the pool:

``baseline``
    Prior-work scheme.  Children of S are (S - {max}) + {max+1} and
    S + {max+1}, both existing when max(S) < n.  Generation is already
    duplicate-free but the pool is never pruned, so a completed k-run
    always makes exactly 2k+1 insertions and peaks at k+1 entries (when
    no extracted subset tops out at position n).

``dedup``
    Walks the denser shift graph: the mandatory static pair plus the
    configurable incremental edge flavour.  Nodes can be reached twice,
    so candidate labels are checked against a guard set of canonical
    masks.  The guard keeps extracted labels for the whole run by
    default; ``safe=False`` switches to deleting them on extraction,
    which can report a tied subset twice (see tests for an instance).

``bitvec``
    Walks the final one-parent DAG carrying full bit patterns: copying
    the pattern costs O(n) per child and decoding positions costs O(n)
    per emission.  Max-side pruning holds the pool near the number of
    answers still owed.

``compact``
    Same walk in cursor-only form: O(1) state per node, no pattern, no
    positions.  Emits (parent_rank, removed, added) deltas that
    :func:`topk_subsets.core.expand_deltas` can replay into positions.

The on-demand walkers skip child generation on the final extraction
(nothing after it can ever surface), which keeps a completed run's
insertions within [k, 2k-1].
"""

from __future__ import annotations

import time
from enum import Enum
from typing import Iterator

from .core import Delta, InputSet, RankedSubset, SubsetPositions, mask_from_positions
from .pool import BoundedPool, RunMetrics
from .shifts import (
    ShiftKind,
    bit_root,
    compact_children,
    compact_root,
    final_dag_children,
    incremental_children_all,
    mandatory_static_children,
)

__all__ = [
    "Variant",
    "topk",
    "baseline_children",
    "run_baseline",
    "run_dedup",
    "run_ondemand_bitvec",
    "run_ondemand_compact",
]

Stream = Iterator[RankedSubset]


class Variant(Enum):
    BASELINE = "baseline"
    DEDUP_HEAP = "dedup"
    ONDEMAND_BITVEC = "bitvec"
    ONDEMAND_COMPACT = "compact"


def _answer_count(r: InputSet, k: int) -> int:
    """Number of answers a k-run will actually emit: min(k, 2**n - 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = r.n
    if n < 64 and k > (1 << n) - 1:
        return (1 << n) - 1
    return k


def baseline_children(s: SubsetPositions, n: int) -> list[SubsetPositions]:
    """Baseline successors of s: replace-max and extend-max, in that order."""
    m = s[-1]
    if m >= n:
        return []
    return [s[:-1] + (m + 1,), s + (m + 1,)]


def run_baseline(r: InputSet, k: int) -> tuple[Stream, RunMetrics]:
    """Prior-work enumeration over (positions, sum) nodes, no pruning."""
    metrics = RunMetrics()
    k_eff = _answer_count(r, k)
    values = r.values
    n = r.n

    def gen() -> Stream:
        t0 = time.perf_counter_ns()
        try:
            pool = BoundedPool(metrics)
            pool.insert(((1,), values[0]), values[0])
            extract, insert = pool.extract_min, pool.insert
            for q in range(1, k_eff + 1):
                positions, total = extract()
                kids = baseline_children(positions, n)
                if kids:
                    m = positions[-1]
                    replaced = total - values[m - 1] + values[m]
                    extended = total + values[m]
                    insert((kids[0], replaced), replaced)
                    insert((kids[1], extended), extended)
                yield RankedSubset(q, total, positions, None)
        finally:
            metrics.elapsed_ns = time.perf_counter_ns() - t0

    return gen(), metrics


def run_dedup(
    r: InputSet,
    k: int,
    edge_set: ShiftKind = ShiftKind.INCREMENTAL,
    *,
    safe: bool = True,
    prune: bool = True,
) -> tuple[Stream, RunMetrics]:
    """Guarded best-first walk over static-pair plus incremental edges.

    The guard is a hash set of canonical bit masks (one membership test
    per candidate).  With ``prune`` on, the pool is cut back to the
    number of answers still owed after each step; pruned labels stay in
    the guard since a pruned subset can never re-enter the answer.
    """
    metrics = RunMetrics()
    k_eff = _answer_count(r, k)
    values = r.values
    n = r.n

    def gen() -> Stream:
        t0 = time.perf_counter_ns()
        try:
            pool = BoundedPool(metrics)
            root = ((1,), values[0])
            seen = {mask_from_positions(root[0])}
            pool.insert(root, root[1])
            for q in range(1, k_eff + 1):
                positions, total = pool.extract_min()
                if not safe:
                    seen.discard(mask_from_positions(positions))
                children = [c for c, _ in mandatory_static_children(positions, n)]
                children.extend(incremental_children_all(positions, n, edge_set))
                for child in children:
                    mask = mask_from_positions(child)
                    if mask not in seen:
                        seen.add(mask)
                        child_total = sum(values[p - 1] for p in child)
                        pool.insert((child, child_total), child_total)
                if prune:
                    while q < k_eff and len(pool) > k_eff - q:
                        pool.prune_max()
                yield RankedSubset(q, total, positions, None)
        finally:
            metrics.elapsed_ns = time.perf_counter_ns() - t0

    return gen(), metrics


def run_ondemand_bitvec(r: InputSet, k: int) -> tuple[Stream, RunMetrics]:
    """Final-DAG walk over full bit patterns; positions decoded per emission."""
    metrics = RunMetrics()
    k_eff = _answer_count(r, k)

    def gen() -> Stream:
        t0 = time.perf_counter_ns()
        try:
            pool = BoundedPool(metrics)
            root = bit_root(r)
            pool.insert(root, root.total)
            # bound locally: the loop body runs k_eff times
            extract, insert, prune = pool.extract_min, pool.insert, pool.prune_max
            for q in range(1, k_eff + 1):
                node = extract()
                if q < k_eff:
                    for child, _ in final_dag_children(node, r):
                        insert(child, child.total)
                    if len(pool) > k_eff - q:
                        prune()
                positions = tuple([i for i, bit in enumerate(node.bits, 1) if bit])
                yield RankedSubset(q, node.total, positions, None)
        finally:
            metrics.elapsed_ns = time.perf_counter_ns() - t0

    return gen(), metrics


def run_ondemand_compact(r: InputSet, k: int) -> tuple[Stream, RunMetrics]:
    """Final-DAG walk in cursor-only form; emits delta records, no positions."""
    metrics = RunMetrics()
    k_eff = _answer_count(r, k)

    def gen() -> Stream:
        t0 = time.perf_counter_ns()
        try:
            pool = BoundedPool(metrics)
            root = compact_root(r)
            pool.insert(root, root.total)
            # bound locally: the loop body runs k_eff times
            extract, insert, prune = pool.extract_min, pool.insert, pool.prune_max
            for q in range(1, k_eff + 1):
                node = extract()
                if q < k_eff:
                    for child, _ in compact_children(node, r, q):
                        insert(child, child.total)
                    if len(pool) > k_eff - q:
                        prune()
                yield RankedSubset(
                    q, node.total, None, Delta(node.parent_rank, node.removed, node.added)
                )
        finally:
            metrics.elapsed_ns = time.perf_counter_ns() - t0

    return gen(), metrics


def topk(
    r: InputSet,
    k: int,
    variant: "Variant | str" = Variant.ONDEMAND_COMPACT,
    *,
    edge_set: ShiftKind = ShiftKind.INCREMENTAL,
    safe: bool = True,
    prune: bool = True,
) -> tuple[Stream, RunMetrics]:
    """Stream the k smallest-sum subsets of r under the chosen variant.

    Returns the lazy result stream and its live metrics object; the
    metrics are final once the stream is exhausted (or closed).  When
    fewer than k non-empty subsets exist, the stream ends early and
    ``metrics.extractions`` reports how many were emitted.  Sums are
    non-decreasing; ties order arbitrarily but deterministically.
    """
    variant = Variant(variant) if not isinstance(variant, Variant) else variant
    if variant is Variant.BASELINE:
        return run_baseline(r, k)
    if variant is Variant.DEDUP_HEAP:
        return run_dedup(r, k, edge_set, safe=safe, prune=prune)
    if variant is Variant.ONDEMAND_BITVEC:
        return run_ondemand_bitvec(r, k)
    return run_ondemand_compact(r, k)
