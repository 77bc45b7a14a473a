"""Streaming enumeration of the k smallest-sum non-empty subsets.

Quick use::

    from topk_subsets import load_input, topk, Variant

    r = load_input("3 7 12 14")
    stream, metrics = topk(r, 3, Variant.ONDEMAND_COMPACT)
    for item in stream:
        print(item.rank, item.total)
"""

from .core import (
    BitNode,
    CompactNode,
    Delta,
    InputError,
    InputSet,
    NegativeValueError,
    OverflowRiskError,
    RankedSubset,
    SubsetPositions,
    cursors_from_bits,
    expand_deltas,
    load_input,
    sum_of,
)
from .enumerators import Variant, topk
from .oracle import all_subsets_sorted, topk_oracle
from .pool import BoundedPool, RunMetrics
from .shifts import EdgeType, ShiftKind

__version__ = "0.1.0"

__all__ = [
    "BitNode",
    "BoundedPool",
    "CompactNode",
    "Delta",
    "EdgeType",
    "InputError",
    "InputSet",
    "NegativeValueError",
    "OverflowRiskError",
    "RankedSubset",
    "RunMetrics",
    "ShiftKind",
    "SubsetPositions",
    "Variant",
    "all_subsets_sorted",
    "cursors_from_bits",
    "expand_deltas",
    "load_input",
    "sum_of",
    "topk",
    "topk_oracle",
    "__version__",
]
