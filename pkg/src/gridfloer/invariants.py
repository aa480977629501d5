"""Link invariants read off the bigraded homology.

Everything here sits on one theorem chain: the homology of the collapsed
grid complex is the link's hat-flavor Floer homology tensored with n - l
copies of the two-dimensional factor V, the top Alexander grading of that
homology is the Seifert genus, rank one there detects fiberedness, and its
graded Euler characteristic is the Alexander polynomial.  Coefficients are
GF(2) throughout, so genus and fiberedness are delivered by the mod-2
versions of those detection theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAKnot
from .grid import GridDiagram, link_summary
from .homology import BigradedRanks, PoincarePolynomial, homology_ranks, peel_v
from .laurent import symmetric_normalized

__all__ = [
    "hfk_hat",
    "genus",
    "is_unknot",
    "is_fibered",
    "alexander_polynomial",
    "KnotReport",
    "build_report",
]


def _require_knot(G: GridDiagram, what: str) -> None:
    count = link_summary(G).component_count
    if count != 1:
        raise NotAKnot(f"{what} needs a knot; this grid has {count} components")


def _peeled(G: GridDiagram, ranks: BigradedRanks) -> PoincarePolynomial:
    components = link_summary(G).component_count
    return peel_v(ranks.to_poincare(), G.n - components)


def hfk_hat(G: GridDiagram) -> BigradedRanks:
    """Hat-flavor knot (or link) Floer homology ranks, V factors divided out."""
    return _peeled(G, homology_ranks(G)).to_ranks()


def genus(G: GridDiagram) -> int:
    """Seifert genus of a knot: the top Alexander grading carrying homology."""
    _require_knot(G, "genus")
    top = hfk_hat(G).max_alexander()
    assert top.denominator == 1, "knot gradings are integers"
    return int(top)


def is_unknot(G: GridDiagram) -> bool:
    """Unknot detection: total collapsed homology rank is exactly 2^(n-1).

    Equivalent to the peeled homology being a single generator at (0, 0),
    since each of the n - 1 V factors doubles the total rank.
    """
    _require_knot(G, "unknot detection")
    return homology_ranks(G).total_rank() == 2 ** (G.n - 1)


def is_fibered(G: GridDiagram) -> bool:
    """Fiberedness of a knot: rank one at the top Alexander grading.

    This is the mod-2 rank statement; it is the standard detection criterion
    for the coefficients used by this package.
    """
    _require_knot(G, "fiberedness")
    ranks = hfk_hat(G)
    return ranks.rank_at_alexander(ranks.max_alexander()) == 1


def alexander_polynomial(G: GridDiagram) -> dict[int, int]:
    """Alexander polynomial of a knot as exponent -> coefficient.

    Graded Euler characteristic of the peeled homology, normalized to the
    palindromic representative with positive value at 1.
    """
    _require_knot(G, "the Alexander polynomial")
    return _alexander_from_ranks(hfk_hat(G))


def _alexander_from_ranks(ranks: BigradedRanks) -> dict[int, int]:
    chi: dict[int, int] = {}
    for m, s, r in ranks.entries:
        assert s.denominator == 1, "knot gradings are integers"
        e = int(s)
        chi[e] = chi.get(e, 0) + (r if m % 2 == 0 else -r)
    return symmetric_normalized(chi)


@dataclass(frozen=True)
class KnotReport:
    """Every knot invariant this package computes, from one homology run.

    ``alexander`` is the polynomial as sorted (exponent, coefficient) pairs;
    ``total_rank`` is the collapsed homology rank before V peeling.
    """

    n: int
    components: int
    total_rank: int
    poincare: PoincarePolynomial
    genus: int
    is_unknot: bool
    is_fibered: bool
    alexander: tuple[tuple[int, int], ...]

    def to_record(self) -> dict:
        """JSON-ready dict with every field in plain types."""
        return {
            "n": self.n,
            "components": self.components,
            "total_rank": self.total_rank,
            "genus": self.genus,
            "is_unknot": self.is_unknot,
            "is_fibered": self.is_fibered,
            "alexander": [[e, c] for e, c in self.alexander],
            "poincare": [[m, str(s), c] for m, s, c in self.poincare.terms],
        }


def build_report(G: GridDiagram) -> KnotReport:
    """Compute the homology once and derive all knot invariants from it."""
    _require_knot(G, "the knot report")
    ranks = homology_ranks(G)
    peeled = _peeled(G, ranks)
    peeled_ranks = peeled.to_ranks()
    top = peeled_ranks.max_alexander()
    assert top.denominator == 1, "knot gradings are integers"
    alex = _alexander_from_ranks(peeled_ranks)
    return KnotReport(
        n=G.n,
        components=1,
        total_rank=ranks.total_rank(),
        poincare=peeled,
        genus=int(top),
        is_unknot=ranks.total_rank() == 2 ** (G.n - 1),
        is_fibered=peeled_ranks.rank_at_alexander(top) == 1,
        alexander=tuple(sorted(alex.items())),
    )
