from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import ndimage

from ktiling.arrangement import build_arrangement
from ktiling.coverage import collect_boundary_segments, domain_arrangement
from ktiling.geometry import Segment, polygon_contains
from ktiling.lattice import BBox

from conftest import TILINGS, V, load

UNIT = BBox(Fraction(0), Fraction(1), Fraction(0), Fraction(1))


def _components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        parent[find(e.a)] = find(e.b)
    return len({find(v) for v in vertices})


def _euler_ok(arr):
    V_, E = len(arr.vertices), len(arr.edges)
    return arr.box_face_count == E - V_ + _components(arr.vertices, arr.edges)


def test_empty_box_is_one_cell():
    arr = build_arrangement([], UNIT)
    assert len(arr.cells) == 1
    assert _euler_ok(arr)


def test_two_diagonals_make_four_cells():
    segs = [Segment(V(0, 0), V(1, 1)), Segment(V(0, 1), V(1, 0))]
    arr = build_arrangement(segs, UNIT)
    assert len(arr.cells) == 4
    assert V(Fraction(1, 2), Fraction(1, 2)) in arr.vertices
    assert _euler_ok(arr)


def test_segments_outside_are_clipped_away():
    segs = [Segment(V(-3, -1), V(5, 7)), Segment(V(2, 0), V(2, 1))]
    arr = build_arrangement(segs, UNIT)
    assert len(arr.cells) == 1


def test_vertical_and_collinear_overlaps():
    segs = [
        Segment(V(Fraction(1, 2), 0), V(Fraction(1, 2), 1)),
        Segment(V(Fraction(1, 2), Fraction(1, 4)), V(Fraction(1, 2), Fraction(3, 4))),
        Segment(V(0, Fraction(1, 2)), V(1, Fraction(1, 2))),
        Segment(V(0, Fraction(1, 2)), V(Fraction(3, 4), Fraction(1, 2))),
    ]
    arr = build_arrangement(segs, UNIT)
    assert len(arr.cells) == 4
    assert _euler_ok(arr)


def test_dangling_segment_does_not_split():
    segs = [Segment(V(Fraction(1, 4), Fraction(1, 2)), V(Fraction(3, 4), Fraction(1, 2)))]
    arr = build_arrangement(segs, UNIT)
    assert len(arr.cells) == 1
    assert _euler_ok(arr)


def test_square_tiling_domain_is_one_cell():
    _, P, X = load("unit_square")
    assert len(domain_arrangement(P, X).cells) == 1


@pytest.mark.parametrize("name", sorted(TILINGS) + ["d8_badshear"])
def test_fixture_arrangements_satisfy_euler(name):
    _, P, X = load(name)
    arr = domain_arrangement(P, X)
    assert _euler_ok(arr)
    area = sum(arr.trapezoids[i].area for c in arr.cells for i in c.trapezoids)
    from ktiling.lattice import lattice_det

    assert area == lattice_det(X.lattice)
    for c in arr.cells:
        assert polygon_contains(arr.domain, c.sample, strict=True)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(*[st.fractions(-1, 2, max_denominator=4)] * 4).filter(lambda t: t[:2] != t[2:]),
        max_size=7,
    )
)
def test_random_segments_satisfy_euler(raw):
    segs = [Segment(V(a, b), V(c, d)) for a, b, c, d in raw]
    arr = build_arrangement(segs, UNIT)
    assert _euler_ok(arr)
    assert sum(t.area for t in arr.trapezoids) == 1


def _raster_cells(arr, res=500):
    """Count faces inside the domain on a pixel grid, walls drawn one pixel thick."""
    box = BBox.from_points(arr.domain)
    xs = np.linspace(float(box.xmin), float(box.xmax), res)
    ys = np.linspace(float(box.ymin), float(box.ymax), res)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    h = max(xs[1] - xs[0], ys[1] - ys[0])
    free = np.ones_like(gx, dtype=bool)
    dom = [(float(p.x), float(p.y)) for p in arr.domain]
    for i in range(len(dom)):
        (ax, ay), (bx, by) = dom[i], dom[(i + 1) % len(dom)]
        free &= (bx - ax) * (gy - ay) - (by - ay) * (gx - ax) > 0
    for e in arr.edges:
        ax, ay, bx, by = float(e.a.x), float(e.a.y), float(e.b.x), float(e.b.y)
        dx, dy = bx - ax, by - ay
        t = np.clip(((gx - ax) * dx + (gy - ay) * dy) / (dx * dx + dy * dy), 0, 1)
        dist = np.hypot(gx - ax - t * dx, gy - ay - t * dy)
        free &= dist > 0.75 * h
    _, count = ndimage.label(free)
    return count


@pytest.mark.parametrize("name", ["d8_lemma3", "d8prime_grs", "square_twofold"])
def test_cell_count_matches_raster(name):
    _, P, X = load(name)
    arr = domain_arrangement(P, X)
    assert _raster_cells(arr) == len(arr.cells)


def test_boundary_segments_are_whole_edges():
    _, P, X = load("d8_lemma3")
    segs = collect_boundary_segments(P, X)
    assert len(segs) % P.n == 0
    lengths = {(s.b.x - s.a.x, s.b.y - s.a.y) for s in segs}
    assert lengths <= {(e.b.x - e.a.x, e.b.y - e.a.y) for e in P.edges()}
