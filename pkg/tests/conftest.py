from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ktiling import kernels
from ktiling.geometry import Vec2, make_cs_polygon
from ktiling.instance import load_instance
from ktiling.lattice import Lattice, TranslateMultiset

TILINGS = {
    "d8_lemma3": 5,
    "d10_lemma4": 5,
    "d8prime_grs": 7,
    "unit_square": 1,
    "square_twofold": 2,
    "hexagon_fedorov": 1,
}


def load(name):
    cfg = load_instance(name)
    P, X = cfg.build()
    return cfg, P, X


@pytest.fixture(params=kernels.available_backends())
def kernel_backend(request):
    before = kernels.backend()
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(before)


def V(x, y) -> Vec2:
    return Vec2(Fraction(x), Fraction(y))


small_rat = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def cs_polygons(draw, max_m=5):
    """Random centrally symmetric convex polygons: m edge vectors sorted by
    angle in [0, pi), walked forwards then backwards."""
    m = draw(st.integers(2, max_m))
    dirs = draw(
        st.lists(
            st.tuples(st.integers(-4, 4), st.integers(0, 4)).filter(
                lambda d: (d[1] > 0 or d[0] > 0) and math.gcd(*d) == 1
            ),
            min_size=m,
            max_size=m,
            unique=True,
        )
    )
    scale = draw(st.lists(st.fractions(min_value=Fraction(1, 2), max_value=2, max_denominator=3), min_size=m, max_size=m))
    dirs.sort(key=lambda d: math.atan2(d[1], d[0]))
    edges = [V(d[0] * s, d[1] * s) for d, s in zip(dirs, scale)]
    edges += [-e for e in edges]
    start = V(draw(small_rat), draw(small_rat))
    pts = [start]
    for e in edges[:-1]:
        pts.append(pts[-1] + e)
    return make_cs_polygon(pts)


@st.composite
def lattices(draw):
    a, b, c, d = draw(
        st.tuples(*[st.integers(-4, 4)] * 4).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)
    )
    q = draw(st.integers(1, 3))
    return Lattice(V(Fraction(a, q), Fraction(b, q)), V(Fraction(c, q), Fraction(d, q)))


@st.composite
def multisets(draw, max_r=2):
    L = draw(lattices())
    r = draw(st.integers(1, max_r))
    offs = [V(draw(small_rat), draw(small_rat)) for _ in range(r)]
    return TranslateMultiset(L, tuple(offs))
