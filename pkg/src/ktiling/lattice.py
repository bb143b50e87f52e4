"""Lattices, fundamental domains and periodic translate multisets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateBasis
from .geometry import CSPolygon, Vec2, cross, orient, rat, vec


def _as_vec(p) -> Vec2:
    return p if isinstance(p, Vec2) else vec(*p)


class BBox(NamedTuple):
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction

    @classmethod
    def from_points(cls, pts: Iterable) -> "BBox":
        pts = list(pts)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return cls(min(xs), max(xs), min(ys), max(ys))

    @classmethod
    def of(cls, xmin, xmax, ymin, ymax) -> "BBox":
        box = cls(rat(xmin), rat(xmax), rat(ymin), rat(ymax))
        if box.xmin > box.xmax or box.ymin > box.ymax:
            raise ValueError(f"empty box {box}")
        return box

    def corners(self) -> list[Vec2]:
        return [
            Vec2(self.xmin, self.ymin),
            Vec2(self.xmax, self.ymin),
            Vec2(self.xmax, self.ymax),
            Vec2(self.xmin, self.ymax),
        ]

    def contains(self, p) -> bool:
        return self.xmin <= p[0] <= self.xmax and self.ymin <= p[1] <= self.ymax

    def expanded(self, d) -> "BBox":
        return BBox(self.xmin - d, self.xmax + d, self.ymin - d, self.ymax + d)

    def __contains__(self, other) -> bool:
        return (
            self.xmin <= other.xmin
            and other.xmax <= self.xmax
            and self.ymin <= other.ymin
            and other.ymax <= self.ymax
        )


@dataclass(frozen=True)
class Lattice:
    u1: Vec2
    u2: Vec2

    def __post_init__(self):
        object.__setattr__(self, "u1", _as_vec(self.u1))
        object.__setattr__(self, "u2", _as_vec(self.u2))
        if cross(self.u1, self.u2) == 0:
            raise DegenerateBasis(f"basis {self.u1}, {self.u2} is linearly dependent")

    @property
    def signed_det(self) -> Fraction:
        return cross(self.u1, self.u2)

    def coords(self, p) -> tuple[Fraction, Fraction]:
        """Coefficients (a, b) with p = a*u1 + b*u2."""
        d = self.signed_det
        return cross(p, self.u2) / d, cross(self.u1, p) / d

    def point(self, z1, z2) -> Vec2:
        return Vec2(self.u1.x * z1 + self.u2.x * z2, self.u1.y * z1 + self.u2.y * z2)

    def reduce(self, p) -> Vec2:
        a, b = self.coords(p)
        return Vec2(*p) - self.point(math.floor(a), math.floor(b))

    def fundamental_domain(self) -> "FundamentalDomain":
        return FundamentalDomain(self)


def lattice_det(L: Lattice) -> Fraction:
    return abs(L.signed_det)


def reduce_to_fd(L: Lattice, v) -> Vec2:
    """Representative of ``v`` modulo ``L`` in the half-open parallelogram."""
    return L.reduce(v)


@dataclass(frozen=True)
class FundamentalDomain:
    """Half-open parallelogram {a*u1 + b*u2 : 0 <= a, b < 1}."""

    lattice: Lattice
    half_open: bool = True

    @property
    def corners(self) -> tuple[Vec2, Vec2, Vec2, Vec2]:
        L = self.lattice
        o = Vec2(Fraction(0), Fraction(0))
        return (o, L.u1, L.u1 + L.u2, L.u2)

    def polygon(self) -> list[Vec2]:
        """Corners in counterclockwise order."""
        c = list(self.corners)
        return c if self.lattice.signed_det > 0 else [c[0], c[3], c[2], c[1]]

    def bbox(self) -> BBox:
        return BBox.from_points(self.corners)

    def contains(self, p) -> bool:
        a, b = self.lattice.coords(p)
        return 0 <= a < 1 and 0 <= b < 1


def fundamental_domain(L: Lattice) -> FundamentalDomain:
    return FundamentalDomain(L)


@dataclass(frozen=True)
class TranslateMultiset:
    """Periodic multiset X = union over offsets o of (L + o).

    Offsets are stored reduced modulo the lattice and in input order;
    repeats are meaningful.
    """

    lattice: Lattice
    offsets: tuple[Vec2, ...] = (Vec2(Fraction(0), Fraction(0)),)

    def __post_init__(self):
        offs = tuple(self.lattice.reduce(_as_vec(o)) for o in self.offsets)
        if not offs:
            raise ValueError("a translate multiset needs at least one offset")
        object.__setattr__(self, "offsets", offs)

    @property
    def r(self) -> int:
        return len(self.offsets)

    def shifted(self, w) -> "TranslateMultiset":
        w = _as_vec(w)
        return TranslateMultiset(self.lattice, tuple(o + w for o in self.offsets))


def _meets_box(verts: Sequence[Vec2], box: BBox) -> bool:
    """Closed convex polygon (counterclockwise) vs closed box, by separating axes."""
    xs = [v.x for v in verts]
    ys = [v.y for v in verts]
    if max(xs) < box.xmin or min(xs) > box.xmax or max(ys) < box.ymin or min(ys) > box.ymax:
        return False
    corners = box.corners()
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if all(orient(a, b, c) < 0 for c in corners):
            return False
    return True


class Translate(NamedTuple):
    z1: int
    z2: int
    offset_index: int
    t: Vec2


def translates_meeting(P: CSPolygon, X: TranslateMultiset, box: BBox) -> list[Translate]:
    """Translates t in X with (P + t) meeting the closed box, with lattice keys."""
    L = X.lattice
    pb = P.bbox()
    # t must lie in box (+) (-P); bound its lattice coordinates by the bbox of that sum
    region = BBox(box.xmin - pb.xmax, box.xmax - pb.xmin, box.ymin - pb.ymax, box.ymax - pb.ymin)
    out = []
    for j, o in enumerate(X.offsets):
        cs = [L.coords(c - o) for c in region.corners()]
        a_lo, a_hi = math.ceil(min(c[0] for c in cs)), math.floor(max(c[0] for c in cs))
        b_lo, b_hi = math.ceil(min(c[1] for c in cs)), math.floor(max(c[1] for c in cs))
        for z1 in range(a_lo, a_hi + 1):
            for z2 in range(b_lo, b_hi + 1):
                t = L.point(z1, z2) + o
                if not region.contains(t):
                    continue
                if _meets_box([v + t for v in P.vertices], box):
                    out.append(Translate(z1, z2, j, t))
    out.sort(key=lambda tr: (tr.z1, tr.z2, tr.offset_index))
    return out


def enumerate_translates(P: CSPolygon, X: TranslateMultiset, box: BBox) -> list[Vec2]:
    """Translation vectors t of X, with multiplicity, such that P + t meets ``box``.

    Ordered lexicographically by lattice coordinates, then offset index.
    """
    return [tr.t for tr in translates_meeting(P, X, box)]
