"""Classical Alexander polynomial of a knot grid via winding numbers.

This route never touches the chain complex: it builds the matrix whose
(c, r) entry is q raised to the winding number of the link around the
lattice point (c, r), expands the determinant, and divides by (1 - q)^(n-1).
It exists to cross-check the homological computation, so it deliberately
shares no machinery with it beyond the grid type and the one-variable
polynomial helpers.
"""

from __future__ import annotations

import itertools

from .errors import NotAKnot
from .grid import GridDiagram, link_summary
from .laurent import divide_by_one_minus_var, symmetric_normalized

__all__ = ["winding_matrix", "alexander_via_determinant"]


def winding_matrix(G: GridDiagram) -> list[list[int]]:
    """``w[c][r]``: winding number of the oriented link around lattice point (c, r).

    Vertical segments run from O to X; a downward segment strictly to the
    left of a point adds one to its winding number, an upward segment
    subtracts one (counterclockwise positive).  Column by column, w is the
    running sum of the segments crossed.
    """
    n = G.n
    w = [[0] * n for _ in range(n)]
    for c in range(1, n):
        prev = w[c - 1]
        cur = w[c]
        o, x = G.o_rows[c - 1], G.x_rows[c - 1]
        lo, hi = min(o, x), max(o, x)
        sign = 1 if x < o else -1
        for r in range(n):
            cur[r] = prev[r] + (sign if lo < r <= hi else 0)
    return w


def _parity(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions & 1


def alexander_via_determinant(G: GridDiagram) -> dict[int, int]:
    """Symmetric-normalized Alexander polynomial, exponent -> coefficient.

    det(q^{w[c][r]}) expanded over permutations, divided exactly by
    (1 - q)^(n-1), then shifted to the palindromic representative with
    positive value at 1.  Knots only.
    """
    if link_summary(G).component_count != 1:
        raise NotAKnot("the determinant route is implemented for knots only")
    n = G.n
    w = winding_matrix(G)
    det: dict[int, int] = {}
    for perm in itertools.permutations(range(n)):
        e = sum(w[c][perm[c]] for c in range(n))
        det[e] = det.get(e, 0) + (-1 if _parity(perm) else 1)
    poly = det
    for _ in range(n - 1):
        poly = divide_by_one_minus_var(poly)
    return symmetric_normalized(poly)
