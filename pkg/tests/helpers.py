"""Shared fixtures and independent oracles for the test suite.

The oracles recompute what the package computes, by deliberately different
routes: gradings by literal southwest pair counting over weighted point
sets, rectangles by exhaustive enumeration of all n^4 corner choices,
components by union-find over link segments, and homology by a dense
Gaussian elimination pipeline built only on those oracles.  Agreement
between a fast path and its oracle is evidence for both.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from gridfloer import GridDiagram, link_summary, new_grid, random_grid

UNKNOT2 = new_grid(2, (1, 0), (0, 1))
UNKNOT4 = new_grid(4, (1, 2, 3, 0), (0, 1, 2, 3))
TREFOIL5 = new_grid(5, (2, 3, 4, 0, 1), (0, 1, 2, 3, 4))
FIG8_6 = new_grid(6, (0, 2, 1, 4, 3, 5), (4, 5, 3, 2, 0, 1))
TORUS25_7 = new_grid(7, (2, 3, 4, 5, 6, 0, 1), (0, 1, 2, 3, 4, 5, 6))
TWIST7 = new_grid(7, (0, 2, 3, 1, 4, 6, 5), (3, 4, 5, 6, 0, 2, 1))
HOPF4 = new_grid(4, (2, 3, 0, 1), (0, 1, 2, 3))

KNOWN_KNOTS = (UNKNOT2, UNKNOT4, TREFOIL5, FIG8_6, TORUS25_7, TWIST7)
KNOWN_GRIDS = KNOWN_KNOTS + (HOPF4,)


def random_knot_grid(n: int, rng: random.Random) -> GridDiagram:
    """A random grid, rejected down to single-component diagrams."""
    while True:
        G = random_grid(n, rng)
        if link_summary(G).component_count == 1:
            return G


def all_grids(n: int):
    """Every valid grid of size n: both markings permutations, no shared cell."""
    for o in itertools.permutations(range(n)):
        for x in itertools.permutations(range(n)):
            if all(x[c] != o[c] for c in range(n)):
                yield GridDiagram(n, o, x)


# -- grading oracle -----------------------------------------------------------

WeightedPoints = list[tuple[tuple[Fraction, Fraction], Fraction]]


def _southwest_pairs(A: WeightedPoints, B: WeightedPoints) -> Fraction:
    """I(A, B): weighted count of pairs (a, b) with a strictly southwest of b."""
    total = Fraction(0)
    for (ax, ay), ca in A:
        for (bx, by), cb in B:
            if ax < bx and ay < by:
                total += ca * cb
    return total


def _j_pairing(A: WeightedPoints, B: WeightedPoints) -> Fraction:
    return (_southwest_pairs(A, B) + _southwest_pairs(B, A)) / 2


def oracle_bigrading(G: GridDiagram, x) -> tuple[Fraction, Fraction]:
    """(Maslov, Alexander) by the literal pair-counting formulas.

    M(x) = J(x, x) - 2 J(x, O) + J(O, O) + 1 and
    A(x) = J(x - (X + O)/2, X - O) - (n - 1)/2, with generator points at
    integer coordinates, markings at half-integer cell centers, and J
    extended bilinearly to weighted point sets.
    """
    half = Fraction(1, 2)
    one = Fraction(1)
    gen: WeightedPoints = [((Fraction(c), Fraction(r)), one) for c, r in enumerate(x)]
    os_: WeightedPoints = [((c + half, r + half), one) for c, r in enumerate(G.o_rows)]
    xs_: WeightedPoints = [((c + half, r + half), one) for c, r in enumerate(G.x_rows)]
    m = _j_pairing(gen, gen) - 2 * _j_pairing(gen, os_) + _j_pairing(os_, os_) + 1
    first = gen + [(p, -half) for p, _ in xs_] + [(p, -half) for p, _ in os_]
    second = xs_ + [(p, -one) for p, _ in os_]
    a = _j_pairing(first, second) - Fraction(G.n - 1, 2)
    return m, a


# -- rectangle oracle ---------------------------------------------------------

RectKey = tuple[int, int, int, int, tuple[int, ...], tuple[int, ...]]


def rect_key(r) -> RectKey:
    return (r.c1, r.r1, r.c2, r.r2, tuple(r.o_count), tuple(r.x_count))


def oracle_empty_rectangles(G: GridDiagram, x, y) -> set[RectKey]:
    """Empty rectangles from x to y by brute force over all n^4 corner choices.

    A corner choice (c1, r1, c2, r2) qualifies when the two source corners
    are points of x, replacing them by the opposite corners gives exactly y,
    and no generator point has all four of its surrounding cells inside the
    swept region.  Marking counts come from direct cell membership.
    """
    n = G.n
    x = tuple(x)
    y = tuple(y)
    found: set[RectKey] = set()
    for c1, r1, c2, r2 in itertools.product(range(n), repeat=4):
        if c1 == c2 or r1 == r2:
            continue
        if x[c1] != r1 or x[c2] != r2:
            continue
        swapped = list(x)
        swapped[c1], swapped[c2] = r2, r1
        if tuple(swapped) != y:
            continue
        w = (c2 - c1) % n
        h = (r2 - r1) % n
        cells = {((c1 + i) % n, (r1 + j) % n) for i in range(w) for j in range(h)}
        interior = any(
            {
                (pc % n, pr % n),
                ((pc - 1) % n, pr % n),
                (pc % n, (pr - 1) % n),
                ((pc - 1) % n, (pr - 1) % n),
            }
            <= cells
            for pc, pr in enumerate(x)
        )
        if interior:
            continue
        o_vec = tuple(int((c, G.o_rows[c]) in cells) for c in range(n))
        x_vec = tuple(int((c, G.x_rows[c]) in cells) for c in range(n))
        found.add((c1, r1, c2, r2, o_vec, x_vec))
    return found


# -- component oracle ---------------------------------------------------------


def oracle_components(G: GridDiagram) -> int:
    """Component count by union-find over the 2n link segments.

    Each column holds one vertical segment joining its O and X, each row one
    horizontal segment; a column's segment touches the horizontal segments
    of the two rows its markings sit in.
    """
    n = G.n
    parent = list(range(2 * n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in range(n):
        for r in (G.o_rows[c], G.x_rows[c]):
            parent[find(c)] = find(n + r)
    return len({find(i) for i in range(2 * n)})


# -- dense homology oracle ----------------------------------------------------


def dense_rank(rows: list[list[int]]) -> int:
    """Gaussian elimination rank over GF(2) on explicit 0/1 row lists."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    cols = len(mat[0])
    rank = 0
    pivot_row = 0
    for col in range(cols):
        pivot = next((i for i in range(pivot_row, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        for i in range(len(mat)):
            if i != pivot_row and mat[i][col]:
                mat[i] = [a ^ b for a, b in zip(mat[i], mat[pivot_row])]
        rank += 1
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return rank


def oracle_homology(G: GridDiagram) -> dict[tuple[int, Fraction], int]:
    """Bigraded homology ranks from scratch, sharing nothing with the fast path.

    Generators by direct permutation listing, gradings by the J-formula
    oracle, boundary entries by the corner-enumeration oracle (a rectangle
    moves exactly two columns, so only two-column swaps of x can receive a
    nonzero entry), ranks by dense elimination.
    """
    n = G.n
    gens = list(itertools.permutations(range(n)))
    grading = {g: oracle_bigrading(G, g) for g in gens}

    def boundary_targets(x) -> set:
        out = set()
        for c1, c2 in itertools.combinations(range(n), 2):
            y = list(x)
            y[c1], y[c2] = y[c2], y[c1]
            y = tuple(y)
            odd = 0
            for key in oracle_empty_rectangles(G, x, y):
                _, _, _, _, o_vec, x_vec = key
                if not any(o_vec) and not any(x_vec):
                    odd ^= 1
            if odd:
                out.add(y)
        return out

    buckets: dict[tuple[Fraction, Fraction], list] = {}
    for g in gens:
        m, _ = grading[g]
        assert m.denominator == 1, "Maslov gradings must be integers"
        buckets.setdefault(grading[g], []).append(g)
    d = {g: boundary_targets(g) for g in gens}

    ranks: dict[tuple[int, Fraction], int] = {}
    for (m, a), basis in buckets.items():
        below = buckets.get((m - 1, a), [])
        above = buckets.get((m + 1, a), [])
        out_rank = dense_rank([[int(y in d[x]) for y in below] for x in basis]) if below else 0
        in_rank = dense_rank([[int(y in d[x]) for y in basis] for x in above]) if above else 0
        r = len(basis) - out_rank - in_rank
        assert r >= 0, "oracle homology rank must not go negative"
        if r:
            ranks[(int(m), a)] = r
    return ranks
