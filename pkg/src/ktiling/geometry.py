"""Exact rational plane geometry.

Every coordinate is a :class:`fractions.Fraction`; no predicate in this module
ever touches a float.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CollinearVertices,
    NotCentrallySymmetric,
    NotConvex,
    OddVertexCount,
    TooFewVertices,
)

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact predicates.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if any(c in value for c in ".eE"):
            raise ValueError(f"decimal literal not allowed: {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Vec2(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):  # type: ignore[override]
        return Vec2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Vec2(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def __mul__(self, k):  # type: ignore[override]
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.x},{self.y})"


Point = Vec2


def vec(x, y) -> Vec2:
    return Vec2(rat(x), rat(y))


def cross(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def dot(a, b) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def orient(p, q, r) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


class Orientation(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


def orientation(p, q, r) -> Orientation:
    return Orientation(orient(p, q, r))


@dataclass(frozen=True)
class Segment:
    a: Vec2
    b: Vec2

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("degenerate segment")

    def key(self) -> tuple[Vec2, Vec2]:
        """Orientation-free identity, used to deduplicate coincident edges."""
        return (self.a, self.b) if self.a <= self.b else (self.b, self.a)

    def midpoint(self) -> Vec2:
        return Vec2((self.a.x + self.b.x) / 2, (self.a.y + self.b.y) / 2)

    def translated(self, w) -> "Segment":
        return Segment(self.a + w, self.b + w)


class LocationKind(enum.Enum):
    INTERIOR = "interior"
    ON_EDGE = "on_edge"
    AT_VERTEX = "at_vertex"
    EXTERIOR = "exterior"


class Location(NamedTuple):
    kind: LocationKind
    index: int | None = None
    parameter: Fraction | None = None

    @property
    def on_boundary(self) -> bool:
        return self.kind in (LocationKind.ON_EDGE, LocationKind.AT_VERTEX)


class Sector(NamedTuple):
    """Inner angle at a boundary point; the interior sweeps counterclockwise
    from ``dir_in`` to ``dir_out``."""

    dir_in: Vec2
    dir_out: Vec2


@dataclass(frozen=True)
class CSPolygon:
    """Centrally symmetric strictly convex polygon, vertices counterclockwise.

    Build instances with :func:`make_cs_polygon`; the constructor itself does
    not validate.
    """

    vertices: tuple[Vec2, ...]
    center: Vec2

    @property
    def m(self) -> int:
        return len(self.vertices) // 2

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Vec2:
        return self.vertices[i % len(self.vertices)]

    def edge(self, i: int) -> Segment:
        return Segment(self.vertex(i), self.vertex(i + 1))

    def edges(self) -> list[Segment]:
        return [self.edge(i) for i in range(self.n)]

    def edge_vector(self, i: int) -> Vec2:
        return self.vertex(i + 1) - self.vertex(i)

    def translated(self, w) -> "CSPolygon":
        w = Vec2(rat(w[0]), rat(w[1]))
        return CSPolygon(tuple(v + w for v in self.vertices), self.center + w)

    def centered(self) -> "CSPolygon":
        """The same polygon moved so that its center is the origin."""
        return self.translated(-self.center)

    def bbox(self):
        from .lattice import BBox

        return BBox.from_points(self.vertices)


def make_cs_polygon(vertices: Iterable) -> CSPolygon:
    pts = [p if isinstance(p, Vec2) else vec(*p) for p in vertices]
    n = len(pts)
    if n % 2:
        raise OddVertexCount(f"{n} vertices; a centrally symmetric polygon has an even count")
    if n < 4:
        raise TooFewVertices(f"need at least 4 vertices, got {n}")
    if len(set(pts)) != n:
        raise NotConvex("repeated vertex")

    twice_area = sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))
    if twice_area < 0:
        pts = [pts[0]] + pts[:0:-1]
    elif twice_area == 0:
        raise CollinearVertices("polygon has zero area")

    for i in range(n):
        s = orient(pts[i - 1], pts[i], pts[(i + 1) % n])
        if s == 0:
            raise CollinearVertices(f"vertices {(i - 1) % n}, {i}, {(i + 1) % n} are collinear")
        if s < 0:
            raise NotConvex(f"reflex turn at vertex {i}")
    # left turns everywhere still admits self-overlapping star polygons
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if any(orient(a, b, p) < 0 for p in pts):
            raise NotConvex(f"vertex lies outside edge {i}")

    m = n // 2
    center = Vec2((pts[0].x + pts[m].x) / 2, (pts[0].y + pts[m].y) / 2)
    for i in range(n):
        if pts[i] + pts[(i + m) % n] != center * 2:
            raise NotCentrallySymmetric(f"vertex {i} has no mirror image through {center}")
    return CSPolygon(tuple(pts), center)


def polygon_area(P: CSPolygon) -> Fraction:
    n = P.n
    return abs(sum(cross(P.vertices[i], P.vertices[(i + 1) % n]) for i in range(n))) / 2


def point_location(P: CSPolygon, p) -> Location:
    """Classify ``p`` against ``P`` using only orientation signs."""
    verts = P.vertices
    n = len(verts)
    zero_edge = None
    for i in range(n):
        a = verts[i]
        if a[0] == p[0] and a[1] == p[1]:
            return Location(LocationKind.AT_VERTEX, i)
    for i in range(n):
        s = orient(verts[i], verts[(i + 1) % n], p)
        if s < 0:
            return Location(LocationKind.EXTERIOR)
        if s == 0:
            zero_edge = i
    if zero_edge is None:
        return Location(LocationKind.INTERIOR)
    a = verts[zero_edge]
    e = verts[(zero_edge + 1) % n] - a
    t = dot(Vec2(p[0] - a.x, p[1] - a.y), e) / dot(e, e)
    return Location(LocationKind.ON_EDGE, zero_edge, t)


def angle_sector(P: CSPolygon, i: int) -> Sector:
    v = P.vertex(i)
    return Sector(P.vertex(i + 1) - v, P.vertex(i - 1) - v)


def edge_sector(P: CSPolygon, i: int) -> Sector:
    """The flat sector at a relative interior point of edge ``i``."""
    e = P.edge_vector(i)
    return Sector(e, -e)


def polygon_contains(verts: Sequence, p, strict: bool = False) -> bool:
    """Containment test against a counterclockwise convex vertex list."""
    n = len(verts)
    for i in range(n):
        s = orient(verts[i], verts[(i + 1) % n], p)
        if s < 0 or (strict and s == 0):
            return False
    return True
