from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import brute_upper_hull
from rank2spectra.errors import EndpointMismatch, InvalidPoint, InvalidPolygon, RankOverflow
from rank2spectra.hn_polygon import (
    HNPolygon,
    hnp_from_points,
    is_semistable_profile,
    polygon_geq,
    slopes,
)


def verts(poly):
    return [tuple(v) for v in poly.vertices]


@st.composite
def point_sets(draw, max_points=12):
    total_rank = draw(st.integers(1, 8))
    total_deg = draw(st.integers(-10, 10))
    pts = draw(
        st.lists(
            st.tuples(st.integers(1, max(1, total_rank - 1)), st.integers(-12, 12)),
            max_size=max_points,
        )
    )
    if total_rank == 1:
        pts = []
    return pts, (total_rank, total_deg)


def test_hull_empty():
    poly = hnp_from_points([], (2, 3))
    assert verts(poly) == [(0, 0), (2, 3)]
    assert slopes(poly) == [Fraction(3, 2)]


def test_hull_one_point():
    poly = hnp_from_points([(1, 2)], (2, 2))
    assert verts(poly) == [(0, 0), (1, 2), (2, 2)]
    assert slopes(poly) == [2, 0]
    assert verts(poly) == brute_upper_hull([(1, 2)], (2, 2))


def test_hull_absorbs_dominated_points():
    poly = hnp_from_points([(1, 1), (1, 2), (1, 0)], (2, 2))
    assert verts(poly) == [(0, 0), (1, 2), (2, 2)]


def test_hull_merges_collinear():
    assert verts(hnp_from_points([(1, 1), (2, 2)], (3, 3))) == [(0, 0), (3, 3)]
    assert verts(hnp_from_points([(1, 3), (2, 5), (3, 7)], (4, 7))) == [(0, 0), (1, 3), (3, 7), (4, 7)]


def test_hull_errors():
    with pytest.raises(RankOverflow):
        hnp_from_points([(3, 0)], (2, 0))
    with pytest.raises(InvalidPoint):
        hnp_from_points([(0, 1)], (2, 0))
    with pytest.raises(InvalidPoint):
        hnp_from_points([(-1, 0)], (2, 0))
    with pytest.raises(InvalidPoint):
        hnp_from_points([(2, 1)], (2, 0))
    with pytest.raises(InvalidPoint):
        hnp_from_points([], (0, 0))
    # points on the boundary ranks that do not poke out are accepted
    assert verts(hnp_from_points([(0, -3), (2, -5)], (2, 0))) == [(0, 0), (2, 0)]


def test_slopes_examples():
    assert slopes(HNPolygon(((0, 0), (2, 3)))) == [Fraction(3, 2)]
    assert slopes(HNPolygon(((0, 0), (1, 2), (2, 2)))) == [2, 0]
    assert slopes(HNPolygon(((0, 0), (2, -1)))) == [Fraction(-1, 2)]


def test_polygon_validation():
    with pytest.raises(InvalidPolygon):
        HNPolygon(((0, 0), (1, 0), (2, 1)))
    with pytest.raises(InvalidPolygon):
        HNPolygon(((0, 0), (1, 1), (2, 2)))
    with pytest.raises(InvalidPolygon):
        HNPolygon(((1, 0), (2, 0)))
    with pytest.raises(InvalidPolygon):
        HNPolygon(((0, 0), (0, 1)))


def test_polygon_geq_examples():
    p = HNPolygon(((0, 0), (1, 2), (2, 2)))
    q = HNPolygon(((0, 0), (2, 2)))
    assert polygon_geq(p, p)
    assert polygon_geq(p, q)
    assert not polygon_geq(q, p)
    with pytest.raises(EndpointMismatch):
        polygon_geq(HNPolygon(((0, 0), (1, 1), (2, 0))), HNPolygon(((0, 0), (1, 1), (3, 0))))


def test_polygon_geq_incomparable():
    p = HNPolygon(((0, 0), (1, 3), (4, 3)))
    q = HNPolygon(((0, 0), (3, 5), (4, 3)))
    assert not polygon_geq(p, q)
    assert not polygon_geq(q, p)


def test_value_at_between_vertices():
    p = HNPolygon(((0, 0), (2, 3), (5, 3)))
    assert p.value_at(1) == Fraction(3, 2)
    assert p.value_at(Fraction(7, 2)) == 3


@pytest.mark.parametrize(
    "points, total, expected",
    [([(1, -1)], (2, -1), True), ([(1, 0)], (2, -1), False), ([], (2, -1), True)],
)
def test_semistable_profile(points, total, expected):
    assert is_semistable_profile(points, total) is expected
    # direct slope comparison mu(F') <= mu(F)
    direct = all(Fraction(d, r) <= Fraction(total[1], total[0]) for r, d in points)
    assert direct is expected


@given(point_sets())
def test_hull_matches_brute_force(data):
    points, total = data
    poly = hnp_from_points(points, total)
    assert verts(poly) == brute_upper_hull(points, total)
    s = slopes(poly)
    assert all(a > b for a, b in zip(s, s[1:]))


@given(point_sets())
def test_hull_idempotent(data):
    points, total = data
    poly = hnp_from_points(points, total)
    assert hnp_from_points(verts(poly)[1:-1], total) == poly


@given(point_sets())
def test_hull_dominates_every_point(data):
    points, total = data
    poly = hnp_from_points(points, total)
    assert all(poly.value_at(r) >= d for r, d in points)


@given(point_sets())
def test_single_edge_is_minimum(data):
    points, total = data
    poly = hnp_from_points(points, total)
    assert polygon_geq(poly, hnp_from_points([], total))


@given(point_sets())
def test_semistable_iff_single_edge(data):
    points, total = data
    mu = Fraction(total[1], total[0])
    assert is_semistable_profile(points, total) == all(Fraction(d, r) <= mu for r, d in points)


@st.composite
def polygon_triples(draw):
    total = (draw(st.integers(1, 6)), draw(st.integers(-6, 6)))
    pts = st.lists(st.tuples(st.integers(1, max(1, total[0] - 1)), st.integers(-8, 8)), max_size=6)
    polys = [hnp_from_points(draw(pts) if total[0] > 1 else [], total) for _ in range(3)]
    return polys


@given(polygon_triples())
def test_partial_order(polys):
    p, q, r = polys
    assert polygon_geq(p, p)
    if polygon_geq(p, q) and polygon_geq(q, p):
        assert p == q
    if polygon_geq(p, q) and polygon_geq(q, r):
        assert polygon_geq(p, r)
