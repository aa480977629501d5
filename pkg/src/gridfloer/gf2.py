"""GF(2) linear algebra on int-bitset rows."""

from __future__ import annotations

from typing import Iterable

__all__ = ["gf2_rank"]


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as one int per row, bit k = column k.

    Elimination keeps one pivot row per column, keyed by the row's lowest set
    bit; rows are consumed in input order, so the result (and the work done)
    is deterministic for identical input.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank
