from fractions import Fraction
import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from ktiling.errors import (
    CollinearVertices,
    NotCentrallySymmetric,
    NotConvex,
    OddVertexCount,
    PolygonError,
    TooFewVertices,
)
from ktiling.geometry import (
    LocationKind,
    Orientation,
    Segment,
    angle_sector,
    cross,
    make_cs_polygon,
    orient,
    orientation,
    point_location,
    polygon_area,
    polygon_contains,
    rat,
)

from conftest import V, cs_polygons, load, small_rat

D8 = [(-1, 3), (1, 3), (2, 1), (2, -1), (1, -3), (-1, -3), (-2, -1), (-2, 1)]


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)
    assert rat("3/2") == Fraction(3, 2)
    assert rat(-2) == Fraction(-2)


def test_orientation_signs():
    assert orient(V(0, 0), V(1, 0), V(0, 1)) == 1
    assert orientation(V(0, 0), V(1, 0), V(0, -1)) is Orientation.RIGHT
    assert orientation(V(0, 0), V(1, 1), V(3, 3)) is Orientation.COLLINEAR


def test_segment_rejects_zero_length():
    with pytest.raises(ValueError):
        Segment(V(1, 1), V(1, 1))


def test_clockwise_input_is_reoriented():
    P = make_cs_polygon(list(reversed(D8)))
    assert P.vertices[0] == V(-2, 1)
    assert polygon_area(P) == 20
    assert all(orient(P.vertex(i - 1), P.vertex(i), P.vertex(i + 1)) > 0 for i in range(8))


@pytest.mark.parametrize(
    "pts, err",
    [
        ([(0, 0), (1, 0), (1, 1)], OddVertexCount),
        ([(0, 0), (1, 0)], TooFewVertices),
        ([(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)], CollinearVertices),
        ([(0, 0), (4, 0), (4, 4), (3, 1)], NotConvex),
        ([(0, 0), (2, 0), (3, 2), (0, 1)], NotCentrallySymmetric),
        ([(0, 0), (1, 0), (0, 0), (1, 0)], NotConvex),
    ],
)
def test_invalid_polygons(pts, err):
    with pytest.raises(err):
        make_cs_polygon(pts)
    assert issubclass(err, PolygonError)


def test_star_shaped_hexagram_is_rejected():
    # every turn is a left turn, but the boundary winds twice
    pts = [(2, 0), (-1, 2), (-1, -2), (-2, 0), (1, -2), (1, 2)]
    with pytest.raises(PolygonError):
        make_cs_polygon(pts)


def test_fixture_areas():
    areas = {"d8_lemma3": 20, "d10_lemma4": 5, "d8prime_grs": 7, "unit_square": 1, "hexagon_fedorov": 12}
    for name, area in areas.items():
        _, P, _ = load(name)
        assert polygon_area(P) == area


def test_point_location_d8():
    P = make_cs_polygon(D8)
    assert point_location(P, V(0, 0)).kind is LocationKind.INTERIOR
    assert point_location(P, V(1, 3)).kind is LocationKind.AT_VERTEX
    loc = point_location(P, V(0, 3))
    assert loc.kind is LocationKind.ON_EDGE and loc.index == 7 and loc.parameter == Fraction(1, 2)
    assert point_location(P, V(3, 3)).kind is LocationKind.EXTERIOR


@settings(max_examples=60, deadline=None)
@given(cs_polygons())
def test_area_matches_convex_hull(P):
    hull = ConvexHull([[float(v.x), float(v.y)] for v in P.vertices])
    assert len(hull.vertices) == P.n
    assert math.isclose(float(polygon_area(P)), hull.volume, rel_tol=1e-12)


@settings(max_examples=60, deadline=None)
@given(cs_polygons())
def test_central_symmetry_and_parallel_edges(P):
    for i in range(P.m):
        assert P.vertex(i) + P.vertex(i + P.m) == P.center * 2
        assert P.edge_vector(i) == -P.edge_vector(i + P.m)


@settings(max_examples=60, deadline=None)
@given(cs_polygons())
def test_vertex_sectors_sum_to_polygon_angle(P):
    total = 0.0
    for i in range(P.n):
        s = angle_sector(P, i)
        assert cross(s.dir_in, s.dir_out) > 0
        total += math.atan2(float(cross(s.dir_in, s.dir_out)), float(s.dir_in.x * s.dir_out.x + s.dir_in.y * s.dir_out.y))
    assert math.isclose(total, (P.n - 2) * math.pi, rel_tol=1e-9)


@settings(max_examples=80, deadline=None)
@given(cs_polygons(), small_rat, small_rat, small_rat, small_rat)
def test_location_symmetry_and_translation(P, x, y, dx, dy):
    p = V(x, y)
    w = V(dx, dy)
    loc = point_location(P, p)
    assert point_location(P, P.center * 2 - p).kind is loc.kind
    assert point_location(P.translated(w), p + w).kind is loc.kind
    assert polygon_contains(P.vertices, p) == (loc.kind is not LocationKind.EXTERIOR)
    assert polygon_contains(P.vertices, p, strict=True) == (loc.kind is LocationKind.INTERIOR)


@settings(max_examples=40, deadline=None)
@given(cs_polygons(), st.integers(0, 20))
def test_reversal_and_rotation_give_same_polygon(P, shift):
    verts = list(P.vertices)
    k = shift % P.n
    Q = make_cs_polygon(verts[k:] + verts[:k])
    R = make_cs_polygon(list(reversed(verts)))
    assert set(Q.vertices) == set(R.vertices) == set(verts)
    assert Q.center == R.center == P.center
