"""Bigraded GF(2) homology of the grid complex, and rank bookkeeping.

The differential preserves the Alexander grading and drops Maslov by one, so
the complex splits into independent blocks: for each Alexander level s and
Maslov level m there is a boundary matrix C(m, s) -> C(m-1, s) over GF(2),
and the homology rank at (m, s) is dim C(m, s) minus the ranks of the two
adjacent matrices.

The homology of the fully collapsed complex is not yet the link invariant:
it carries n - l extra tensor factors V (l the number of link components),
each V contributing one generator in bidegree (0, 0) and one in (-1, -1).
``peel_v`` divides them back out of the Poincare polynomial, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .chain import Generator, _decode, _tilde_target_codes, iter_alexander_levels
from .errors import NotDivisible
from .gf2 import gf2_rank
from .grid import GridDiagram

__all__ = [
    "BigradedRanks",
    "PoincarePolynomial",
    "BoundaryBlock",
    "TildeComplex",
    "tilde_differential",
    "block_rank",
    "ranks_from_complex",
    "homology_ranks",
    "peel_v",
]


def _as_fraction(s) -> Fraction:
    f = Fraction(s)
    if f.denominator not in (1, 2):
        raise ValueError(f"Alexander gradings are half-integers, got {s!r}")
    return f


@dataclass(frozen=True)
class BigradedRanks:
    """Ranks of a bigraded GF(2) vector space.

    ``entries`` holds (maslov, alexander, rank) triples with positive rank,
    sorted by (alexander, maslov).  Alexander values are Fractions with
    denominator 1 or 2.
    """

    entries: tuple[tuple[int, Fraction, int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, object], int]) -> "BigradedRanks":
        items = []
        for (m, s), r in d.items():
            if r < 0:
                raise ValueError(f"negative rank {r} at ({m}, {s})")
            if r:
                items.append((int(m), _as_fraction(s), int(r)))
        items.sort(key=lambda t: (t[1], t[0]))
        return cls(tuple(items))

    def as_dict(self) -> dict[tuple[int, Fraction], int]:
        return {(m, s): r for m, s, r in self.entries}

    def rank(self, m: int, s) -> int:
        return self.as_dict().get((int(m), _as_fraction(s)), 0)

    def total_rank(self) -> int:
        return sum(r for _, _, r in self.entries)

    def alexander_support(self) -> tuple[Fraction, ...]:
        return tuple(sorted({s for _, s, _ in self.entries}))

    def max_alexander(self) -> Fraction:
        if not self.entries:
            raise ValueError("empty homology has no top Alexander grading")
        return max(s for _, s, _ in self.entries)

    def rank_at_alexander(self, s) -> int:
        s = _as_fraction(s)
        return sum(r for _, t, r in self.entries if t == s)

    def to_poincare(self) -> "PoincarePolynomial":
        return PoincarePolynomial.from_dict({(m, s): r for m, s, r in self.entries})


@dataclass(frozen=True)
class PoincarePolynomial:
    """A polynomial sum of coeff * t^maslov * q^alexander with coeff >= 1.

    ``terms`` holds (maslov, alexander, coeff) sorted by (alexander, maslov).
    Coefficients are ranks, so negatives are rejected at construction.
    """

    terms: tuple[tuple[int, Fraction, int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, object], int]) -> "PoincarePolynomial":
        items = []
        for (m, s), c in d.items():
            if c < 0:
                raise ValueError(f"negative coefficient {c} at ({m}, {s})")
            if c:
                items.append((int(m), _as_fraction(s), int(c)))
        items.sort(key=lambda t: (t[1], t[0]))
        return cls(tuple(items))

    @classmethod
    def one(cls) -> "PoincarePolynomial":
        return cls.from_dict({(0, 0): 1})

    @classmethod
    def v_factor(cls) -> "PoincarePolynomial":
        """The rank polynomial 1 + t^-1 q^-1 of one V tensor factor."""
        return cls.from_dict({(0, 0): 1, (-1, -1): 1})

    def as_dict(self) -> dict[tuple[int, Fraction], int]:
        return {(m, s): c for m, s, c in self.terms}

    def coefficient(self, m: int, s) -> int:
        return self.as_dict().get((int(m), _as_fraction(s)), 0)

    def total(self) -> int:
        return sum(c for _, _, c in self.terms)

    def to_ranks(self) -> BigradedRanks:
        return BigradedRanks.from_dict(self.as_dict())

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        out: dict[tuple[int, Fraction], int] = {}
        for m1, s1, c1 in self.terms:
            for m2, s2, c2 in other.terms:
                key = (m1 + m2, s1 + s2)
                out[key] = out.get(key, 0) + c1 * c2
        return PoincarePolynomial.from_dict(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, s, c in self.terms:
            pieces = []
            if c != 1 or (m == 0 and s == 0):
                pieces.append(str(c))
            if m:
                pieces.append(f"t^{m}")
            if s:
                pieces.append(f"q^{s}")
            parts.append("*".join(pieces))
        return " + ".join(parts)


@dataclass(frozen=True)
class BoundaryBlock:
    """The boundary matrix C(maslov, alexander) -> C(maslov - 1, alexander).

    ``entries`` are (row, col) positions of the nonzero GF(2) coefficients;
    columns index the sources at ``maslov``, rows the targets one below, both
    in lexicographic generator order.
    """

    maslov: int
    alexander: Fraction
    n_rows: int
    n_cols: int
    entries: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TildeComplex:
    """Explicit bases and boundary matrices of the fully collapsed complex.

    Materializes all n! generators; intended for small grids, cross-checks,
    and tests.  ``homology_ranks`` computes the same ranks without keeping
    more than bucket-local state.
    """

    grid: GridDiagram
    bases: Mapping[tuple[int, Fraction], tuple[Generator, ...]]
    blocks: tuple[BoundaryBlock, ...]


def tilde_differential(G: GridDiagram) -> TildeComplex:
    """Assemble the collapsed complex as explicit per-bigrading sparse matrices."""
    n, o, xs = G.n, G.o_rows, G.x_rows
    bases: dict[tuple[int, Fraction], tuple[Generator, ...]] = {}
    blocks: list[BoundaryBlock] = []
    for two_a, levels in iter_alexander_levels(G):
        s = Fraction(two_a, 2)
        index = {m: {code: i for i, code in enumerate(arr)} for m, arr in levels.items()}
        for m in sorted(levels):
            bases[(m, s)] = tuple(_decode(code, n) for code in levels[m])
        for m in sorted(levels):
            lower = index.get(m - 1, {})
            entries: list[tuple[int, int]] = []
            for j, code in enumerate(levels[m]):
                perm = _decode(code, n)
                hits: set[int] = set()
                for t in _tilde_target_codes(perm, code, o, xs, n):
                    hits ^= {t}
                entries.extend((lower[t], j) for t in hits)
            blocks.append(
                BoundaryBlock(m, s, len(lower), len(levels[m]), tuple(sorted(entries)))
            )
    return TildeComplex(G, bases, tuple(blocks))


def block_rank(block: BoundaryBlock) -> int:
    """GF(2) rank of one boundary block."""
    masks = [0] * block.n_cols
    for i, j in block.entries:
        masks[j] |= 1 << i
    return gf2_rank(masks)


def ranks_from_complex(tc: TildeComplex) -> BigradedRanks:
    """Homology ranks of an explicit complex: dim minus adjacent boundary ranks."""
    dims = {key: len(basis) for key, basis in tc.bases.items()}
    brank = {(b.maslov, b.alexander): block_rank(b) for b in tc.blocks}
    out = {}
    for (m, s), d in dims.items():
        h = d - brank.get((m, s), 0) - brank.get((m + 1, s), 0)
        if h < 0:
            raise ArithmeticError(f"negative rank at ({m}, {s}); boundary blocks inconsistent")
        if h:
            out[(m, s)] = h
    return BigradedRanks.from_dict(out)


def homology_ranks(G: GridDiagram) -> BigradedRanks:
    """Bigraded homology ranks of the fully collapsed complex.

    Streams one Alexander level at a time: within a level, per-Maslov bases
    are indexed in lexicographic order, boundary rows are built as int
    bitsets, and only ranks survive the level.
    """
    n, o, xs = G.n, G.o_rows, G.x_rows
    ranks: dict[tuple[int, Fraction], int] = {}
    for two_a, levels in iter_alexander_levels(G):
        index = {m: {code: i for i, code in enumerate(arr)} for m, arr in levels.items()}
        boundary_rank: dict[int, int] = {}
        for m, arr in levels.items():
            lower = index.get(m - 1, {})
            rows = []
            for code in arr:
                perm = _decode(code, n)
                mask = 0
                for t in _tilde_target_codes(perm, code, o, xs, n):
                    mask ^= 1 << lower[t]
                rows.append(mask)
            boundary_rank[m] = gf2_rank(rows)
        s = Fraction(two_a, 2)
        for m, arr in levels.items():
            h = len(arr) - boundary_rank.get(m, 0) - boundary_rank.get(m + 1, 0)
            if h < 0:
                raise ArithmeticError(f"negative rank at ({m}, {s}); differential inconsistent")
            if h:
                ranks[(m, s)] = h
    return BigradedRanks.from_dict(ranks)


def peel_v(poly: PoincarePolynomial, count: int) -> PoincarePolynomial:
    """Divide a rank polynomial by (1 + t^-1 q^-1) ** count, exactly.

    The factor couples bidegrees along diagonals of constant s - m, so each
    diagonal divides independently by descending recursion from its top term.
    A nonzero remainder or a negative quotient coefficient raises
    NotDivisible; for homology of a valid grid that cannot happen, so callers
    treat it as an internal alarm, not an input error.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    coeffs = poly.as_dict()
    for _ in range(count):
        coeffs = _peel_once(coeffs)
    return PoincarePolynomial.from_dict(coeffs)


def _peel_once(
    coeffs: dict[tuple[int, Fraction], int]
) -> dict[tuple[int, Fraction], int]:
    if not coeffs:
        return {}
    diagonals: dict[Fraction, dict[int, int]] = {}
    for (m, s), c in coeffs.items():
        diagonals.setdefault(s - m, {})[m] = c
    out: dict[tuple[int, Fraction], int] = {}
    for d, col in diagonals.items():
        hi, lo = max(col), min(col)
        above = 0  # quotient coefficient at Maslov m + 1
        for m in range(hi, lo - 1, -1):
            q = col.get(m, 0) - above
            if m == lo:
                if q != 0:
                    raise NotDivisible(f"remainder {q} on diagonal s - m = {d}")
            else:
                if q < 0:
                    raise NotDivisible(f"negative quotient {q} at (m, s) = ({m}, {m + d})")
                if q:
                    out[(m, Fraction(m) + d)] = q
            above = q
    return out
