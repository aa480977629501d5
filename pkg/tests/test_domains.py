"""Domains and the Lipshitz index formula."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from gridfloer import (
    GridDomain,
    add_domains,
    bigrading,
    euler_measure,
    from_rectangle,
    maslov,
    maslov_index,
    point_multiplicity,
    random_grid,
    rectangles_from,
    total_N,
    vertex_multiplicity,
)
from gridfloer.errors import BoundaryMismatch, PointNotCorner

from .helpers import TREFOIL5


def _empty_rect(G, rng):
    while True:
        x = tuple(rng.sample(range(G.n), G.n))
        hits = [r for r in rectangles_from(G, x) if r.empty]
        if hits:
            return rng.choice(hits)


def test_from_rectangle_marks_cells_once():
    rng = random.Random(31)
    r = _empty_rect(TREFOIL5, rng)
    D = from_rectangle(r)
    cells = set(r.cells())
    for c in range(5):
        for row in range(5):
            assert D.multiplicities[c][row] == int((c, row) in cells)


def test_domain_rejects_wrong_shape():
    with pytest.raises(BoundaryMismatch):
        GridDomain((0, 1), (1, 0), ((1,), (0,)))


def test_domain_rejects_boundary_defects():
    # A single cell cannot carry a boundary from a generator to itself.
    mult = [[0, 0], [0, 0]]
    mult[0][0] = 1
    with pytest.raises(BoundaryMismatch):
        GridDomain((0, 1), (0, 1), tuple(tuple(col) for col in mult))


def test_periodic_row_domain_is_accepted():
    # A full row of cells has null boundary, so source may equal target.
    n = 5
    row = 2
    mult = tuple(tuple(1 if r == row else 0 for r in range(n)) for _ in range(n))
    x = (0, 2, 3, 4, 1)
    D = GridDomain(x, x, mult)
    assert euler_measure(D) == 0
    assert maslov_index(D) == 2


def test_vertex_multiplicities_of_an_empty_rectangle():
    rng = random.Random(32)
    r = _empty_rect(TREFOIL5, rng)
    D = from_rectangle(r)
    corners = {(r.c1, r.r1), (r.c2, r.r2), (r.c1, r.r2), (r.c2, r.r1)}
    quarter = Fraction(1, 4)
    for point in corners:
        assert vertex_multiplicity(D, point) == quarter
    for c, row in enumerate(D.source):
        if (c, row) not in corners:
            assert vertex_multiplicity(D, (c, row)) == 0


def test_vertex_multiplicity_rejects_non_generator_points():
    rng = random.Random(33)
    D = from_rectangle(_empty_rect(TREFOIL5, rng))
    outside = next(
        (c, r)
        for c in range(5)
        for r in range(5)
        if (c, r) not in set(enumerate(D.source)) and (c, r) not in set(enumerate(D.target))
    )
    with pytest.raises(PointNotCorner):
        vertex_multiplicity(D, outside)


def test_point_multiplicity_wraps_modularly():
    rng = random.Random(34)
    D = from_rectangle(_empty_rect(TREFOIL5, rng))
    assert point_multiplicity(D, 0, 0) == point_multiplicity(D, 5, 5)


def test_empty_rectangle_has_index_exactly_one():
    rng = random.Random(35)
    for _ in range(10):
        G = random_grid(rng.randint(2, 6), rng)
        for _ in range(20):
            x = tuple(rng.sample(range(G.n), G.n))
            for r in rectangles_from(G, x):
                D = from_rectangle(r)
                assert total_N(D) == maslov_index(D)
                assert (maslov_index(D) == 1) == r.empty


def test_one_interior_point_raises_index_to_three():
    for r in rectangles_from(TREFOIL5, (0, 1, 2, 3, 4)):
        if (r.c1, r.r1, r.c2, r.r2) == (0, 0, 2, 2):
            assert not r.empty
            assert maslov_index(from_rectangle(r)) == 3
            return
    raise AssertionError("expected rectangle not enumerated")


def test_index_tracks_maslov_drop_and_o_count():
    rng = random.Random(36)
    for _ in range(8):
        G = random_grid(rng.randint(2, 6), rng)
        for _ in range(25):
            x = tuple(rng.sample(range(G.n), G.n))
            m_x = maslov(G, x)
            for r in rectangles_from(G, x):
                mu = maslov_index(from_rectangle(r))
                assert mu == m_x - maslov(G, r.target) + 2 * r.o_total


def test_index_is_additive_under_composition():
    rng = random.Random(37)
    hits = 0
    while hits < 25:
        G = random_grid(rng.randint(3, 6), rng)
        x = tuple(rng.sample(range(G.n), G.n))
        first = rng.choice(list(rectangles_from(G, x)))
        seconds = list(rectangles_from(G, first.target))
        second = rng.choice(seconds)
        combined = add_domains(from_rectangle(first), from_rectangle(second))
        assert combined.source == x and combined.target == second.target
        mu1 = maslov_index(from_rectangle(first))
        mu2 = maslov_index(from_rectangle(second))
        assert maslov_index(combined) == mu1 + mu2
        hits += 1


def test_add_domains_requires_composability():
    x = (0, 1, 2, 3, 4)
    rects = list(rectangles_from(TREFOIL5, x))
    first = rects[0]
    second = next(r for r in rects if r.target != first.target)
    with pytest.raises(BoundaryMismatch):
        add_domains(from_rectangle(first), from_rectangle(second))


def test_euler_measure_vanishes_on_grid_domains():
    rng = random.Random(39)
    for _ in range(10):
        G = random_grid(rng.randint(2, 6), rng)
        x = tuple(rng.sample(range(G.n), G.n))
        for r in rectangles_from(G, x):
            assert euler_measure(from_rectangle(r)) == 0
