import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latticeshift.corpus import random_convex_polygon, random_unimodular
from latticeshift.geom import (
    DegenerateArea,
    NotConvex,
    NotCounterclockwise,
    NotUnimodular,
    PolygonParseError,
    RationalPoint,
    TooFewVertices,
    ZeroVector,
    affine_length,
    apply_unimodular,
    convex_hull,
    intersect_convex,
    lattice_points,
    minkowski_sum,
    negate,
    parse_polygon_text,
    pick_counts,
    polygon,
    polygon_area,
    validate_polygon,
    wedge,
)


def test_unit_triangle(tri):
    P = validate_polygon([(0, 0), (1, 0), (0, 1)])
    assert P == tri
    assert P.area == Fraction(1, 2)
    assert P.sides == ((1, 0), (-1, 1), (0, -1))


def test_collinear_merge():
    P = validate_polygon([(0, 0), (1, 0), (2, 0), (0, 2)])
    assert P.vertices == ((0, 0), (2, 0), (0, 2))
    assert P.sides[0] == (2, 0)
    assert P.affine_lengths[0] == 2


@pytest.mark.parametrize("pts, exc", [
    ([(0, 0), (1, 1), (2, 2)], DegenerateArea),
    ([(0, 0), (1, 0)], TooFewVertices),
    ([(0, 0), (0, 1), (1, 0)], NotCounterclockwise),
    ([(0, 0), (4, 0), (1, 1), (0, 4)], NotConvex),
    ([(0, 0), (2, 0), (1, 0), (0, 2)], NotConvex),
])
def test_validation_errors(pts, exc):
    with pytest.raises(exc):
        validate_polygon(pts)


def test_reorient_flag(tri):
    assert validate_polygon([(0, 0), (0, 1), (1, 0)], reorient=True) == tri


@pytest.mark.parametrize("v, l", [((4, 6), 2), ((1, 0), 1), ((0, -5), 5)])
def test_affine_length(v, l):
    assert affine_length(v) == l


def test_affine_length_zero():
    with pytest.raises(ZeroVector):
        affine_length((0, 0))


def test_wedge_examples():
    assert wedge((1, 0), (0, 1)) == 1
    assert wedge((2, 3), (2, 3)) == 0
    assert wedge(RationalPoint.of(Fraction(1, 3), Fraction(1, 2)), (2, 1)) == Fraction(-2, 3)


@pytest.mark.parametrize("verts, expected", [
    ([(0, 0), (1, 0), (0, 1)], (0, 3, Fraction(1, 2))),
    ([(0, 0), (1, 0), (1, 1), (0, 1)], (0, 4, Fraction(1))),
    # oracle: 10 lattice points in the closed triangle, 9 of them on sides
    ([(0, 0), (3, 0), (0, 3)], (1, 9, Fraction(9, 2))),
])
def test_pick_counts(verts, expected):
    P = validate_polygon(verts)
    assert pick_counts(P, check=True) == expected


def test_pick_oracle_enumeration():
    P = validate_polygon([(0, 0), (3, 0), (0, 3)])
    pts = lattice_points(P)
    assert len(pts) == 10
    inside = [p for p in pts if p.x > 0 and p.y > 0 and p.x + p.y < 3]
    assert inside == [(1, 1)]


def test_unimodular_examples(tri):
    assert apply_unimodular(((1, 0), (0, 1)), tri) == tri
    assert apply_unimodular(((1, 1), (0, 1)), tri).vertices == ((0, 0), (1, 0), (1, 1))
    with pytest.raises(NotUnimodular):
        apply_unimodular(((2, 0), (0, 1)), tri)


def test_reflection_accepted(tri):
    R = apply_unimodular(((-1, 0), (0, 1)), tri)
    assert R.area == tri.area


def _hull_of_sums(P, Q):
    return validate_polygon(convex_hull([p + q for p in P.vertices for q in Q.vertices]))


def test_minkowski_hexagon(tri):
    H = minkowski_sum(tri, negate(tri))
    assert H == _hull_of_sums(tri, negate(tri))
    assert dict(H.side_profile.entries) == {
        (1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1, (1, -1): 1, (-1, 1): 1,
    }
    assert H.side_profile.is_symmetric()


def test_minkowski_point_and_squares(tri, square):
    assert minkowski_sum(tri, (3, -2)) == tri.translated((3, -2))
    assert minkowski_sum(square, square) == polygon((0, 0), (2, 0), (2, 2), (0, 2))


def test_intersections(tri):
    assert polygon_area(intersect_convex(tri, tri)) == Fraction(1, 2)
    touch = intersect_convex(tri, tri.translated((1, 0)))
    assert touch == (RationalPoint.of(1, 0),)
    assert polygon_area(touch) == 0
    half = [(Fraction(1, 2), 0), (Fraction(3, 2), 0), (Fraction(1, 2), 1)]
    assert polygon_area(intersect_convex(tri, half)) == Fraction(1, 8)


def test_parse_formats(tri):
    assert parse_polygon_text("0 0\n1 0\n# comment\n0 1\n") == tri
    assert parse_polygon_text('{"vertices": [[0,0],[1,0],[0,1]]}') == tri
    with pytest.raises(PolygonParseError) as err:
        parse_polygon_text("0 0\n1 zero\n0 1\n")
    assert err.value.line == 2


polygons = st.builds(
    lambda seed: random_convex_polygon(random.Random(seed), -15, 15, max_points=8),
    st.integers(0, 2 ** 32),
)


@settings(max_examples=60, deadline=None)
@given(polygons)
def test_polygon_invariants(P):
    assert sum(v.x for v in P.sides) == 0 and sum(v.y for v in P.sides) == 0
    assert P.area > 0
    interior, boundary, area = pick_counts(P, check=True)
    assert area == interior + Fraction(boundary, 2) - 1
    assert negate(negate(P)) == P


@settings(max_examples=40, deadline=None)
@given(polygons, st.integers(0, 2 ** 32))
def test_unimodular_invariants(P, seed):
    A = random_unimodular(random.Random(seed), reflections=True)
    Q = apply_unimodular(A, P)
    assert Q.area == P.area
    assert Q.affine_perimeter == P.affine_perimeter
    # a reflection reverses orientation, so the image sides come out negated
    sign = 1 if A[0][0] * A[1][1] - A[0][1] * A[1][0] == 1 else -1
    signed = tuple((r * sign for r in row) for row in A)
    signed = tuple(tuple(row) for row in signed)
    assert Q.side_profile.as_counter() == P.side_profile.transformed(signed).as_counter()


@settings(max_examples=40, deadline=None)
@given(polygons, polygons)
def test_minkowski_profile_union(P, Q):
    S = minkowski_sum(P, Q)
    assert S == _hull_of_sums(P, Q)
    assert S.side_profile.as_counter() == P.side_profile.union(Q.side_profile).as_counter()


@settings(max_examples=40, deadline=None)
@given(polygons, polygons, st.integers(-3, 3), st.integers(-3, 3))
def test_intersection_area_properties(P, Q, dx, dy):
    Q = Q.translated((dx, dy))
    a = polygon_area(intersect_convex(P, Q))
    assert a == polygon_area(intersect_convex(Q, P))
    assert a <= min(P.area, Q.area)
    # P sits inside P + (Q - q0) since q0 is a point of Q
    grown = minkowski_sum(P, Q.translated(-Q.vertices[0]))
    assert polygon_area(intersect_convex(P, grown)) == P.area
