"""Brute-force reference enumeration for differential testing.

Enumerates every non-empty subset, so it is usable only at desk scale
(n <= 24 is enforced).  Ties between equal sums are broken by the
lexicographic order of the position tuples; streaming variants are free
to order ties differently, so comparisons against this oracle should be
on the sum sequence unless all subset sums are distinct.
"""

from __future__ import annotations

from .core import InputSet, Number, SubsetPositions

__all__ = ["all_subsets_sorted", "topk_oracle"]

_N_CAP = 24


def all_subsets_sorted(r: InputSet) -> list[tuple[Number, SubsetPositions]]:
    """All 2**n - 1 non-empty subsets as (sum, positions), fully sorted."""
    n = r.n
    if n > _N_CAP:
        raise ValueError(f"oracle limited to n <= {_N_CAP}, got {n}")
    values = r.values
    sums: list = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]
    out = []
    for mask in range(1, 1 << n):
        positions = tuple(i + 1 for i in range(n) if mask >> i & 1)
        out.append((sums[mask], positions))
    out.sort()
    return out


def topk_oracle(r: InputSet, k: int) -> list[tuple[Number, SubsetPositions]]:
    """First min(k, 2**n - 1) entries of :func:`all_subsets_sorted`."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return all_subsets_sorted(r)[:k]
