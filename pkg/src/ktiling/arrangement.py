"""Planar arrangement of rational segments by vertical slab decomposition.

The plane window (bounding box of the domain) is cut at the x-coordinate of
every segment endpoint and every crossing.  Inside a slab no two segments
cross, so the segments spanning it are totally ordered by height and the gaps
between consecutive ones are trapezoids.  Trapezoids in neighbouring slabs are
glued back into faces wherever the shared vertical wall is not itself covered
by an input segment.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .geometry import Segment, Vec2, cross, polygon_contains
from .lattice import BBox, FundamentalDomain

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class Trapezoid:
    """Open region x0 < x < x1 between a lower and an upper line.

    ``lo0``/``hi0`` are the heights of the bounding lines at x0, ``lo1``/``hi1``
    at x1.  Either side may be degenerate (a triangle).
    """

    x0: Fraction
    x1: Fraction
    lo0: Fraction
    hi0: Fraction
    lo1: Fraction
    hi1: Fraction

    def point(self, s, u) -> Vec2:
        """Point at horizontal fraction ``s`` and vertical fraction ``u``."""
        x = self.x0 + (self.x1 - self.x0) * s
        lo = self.lo0 + (self.lo1 - self.lo0) * s
        hi = self.hi0 + (self.hi1 - self.hi0) * s
        return Vec2(x, lo + (hi - lo) * u)

    @property
    def sample(self) -> Vec2:
        return self.point(Fraction(1, 2), Fraction(1, 2))

    def interior_points(self) -> list[Vec2]:
        """Three distinct points strictly inside."""
        return [
            self.sample,
            self.point(Fraction(1, 3), Fraction(1, 4)),
            self.point(Fraction(3, 4), Fraction(2, 3)),
        ]

    def corners(self) -> list[Vec2]:
        pts = [Vec2(self.x0, self.lo0), Vec2(self.x1, self.lo1), Vec2(self.x1, self.hi1), Vec2(self.x0, self.hi0)]
        out = []
        for p in pts:
            if not out or out[-1] != p:
                out.append(p)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
        return out

    @property
    def area(self) -> Fraction:
        return (self.x1 - self.x0) * ((self.hi0 - self.lo0) + (self.hi1 - self.lo1)) / 2


@dataclass(frozen=True)
class Cell:
    """A face of the arrangement inside the domain."""

    sample: Vec2
    trapezoids: tuple[int, ...]


@dataclass
class Arrangement:
    domain: tuple[Vec2, ...]
    vertices: frozenset
    edges: tuple[Segment, ...]
    trapezoids: tuple[Trapezoid, ...]
    cells: tuple[Cell, ...]
    box_face_count: int
    inside: tuple[bool, ...] = field(repr=False, default=())

    def cell_points(self, cell: Cell) -> list[Vec2]:
        pts = []
        for i in cell.trapezoids:
            pts.extend(self.trapezoids[i].interior_points())
        return pts


def _domain_polygon(domain) -> list[Vec2]:
    if isinstance(domain, FundamentalDomain):
        return domain.polygon()
    if isinstance(domain, BBox):
        return domain.corners()
    pts = [Vec2(Fraction(p[0]), Fraction(p[1])) for p in domain]
    area2 = sum(cross(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))
    return pts if area2 > 0 else pts[::-1]


def _clip(a: Vec2, b: Vec2, box: BBox):
    """Liang-Barsky clip; None when the clipped piece has no length."""
    t0, t1 = _F0, _F1
    dx, dy = b.x - a.x, b.y - a.y
    for p, q in (
        (-dx, a.x - box.xmin),
        (dx, box.xmax - a.x),
        (-dy, a.y - box.ymin),
        (dy, box.ymax - a.y),
    ):
        if p == 0:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            if r > t1:
                return None
            if r > t0:
                t0 = r
        else:
            if r < t0:
                return None
            if r < t1:
                t1 = r
    if t0 >= t1:
        return None
    pa = a if t0 == 0 else Vec2(a.x + dx * t0, a.y + dy * t0)
    pb = b if t1 == 1 else Vec2(a.x + dx * t1, a.y + dy * t1)
    return pa, pb


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            if ri < rj:
                self.parent[rj] = ri
            else:
                self.parent[ri] = rj


def _crossings(segs: list[tuple[Vec2, Vec2]]) -> list[list[Vec2]]:
    """Points where each segment meets any other (crossings, touches, overlap ends)."""
    n = len(segs)
    hits: list[list[Vec2]] = [[] for _ in range(n)]
    order = sorted(range(n), key=lambda i: segs[i][0].x)
    for oi, i in enumerate(order):
        p1, p2 = segs[i]
        rx, ry = p2.x - p1.x, p2.y - p1.y
        ylo_i, yhi_i = min(p1.y, p2.y), max(p1.y, p2.y)
        for j in order[oi + 1 :]:
            p3, p4 = segs[j]
            if p3.x > p2.x:
                break
            if max(p3.y, p4.y) < ylo_i or min(p3.y, p4.y) > yhi_i:
                continue
            sx, sy = p4.x - p3.x, p4.y - p3.y
            qx, qy = p3.x - p1.x, p3.y - p1.y
            d = rx * sy - ry * sx
            if d != 0:
                tn = qx * sy - qy * sx
                un = qx * ry - qy * rx
                if d > 0:
                    ok = 0 <= tn <= d and 0 <= un <= d
                else:
                    ok = d <= tn <= 0 and d <= un <= 0
                if ok:
                    t = tn / d
                    pt = Vec2(p1.x + rx * t, p1.y + ry * t)
                    hits[i].append(pt)
                    hits[j].append(pt)
            elif qx * ry - qy * rx == 0:
                # collinear: each endpoint lying on the other segment splits it
                for p, k in ((p3, i), (p4, i), (p1, j), (p2, j)):
                    a, b = segs[k]
                    if a <= p <= b:
                        hits[k].append(p)
    return hits


def build_arrangement(segments: Sequence[Segment], domain) -> Arrangement:
    """Arrangement of ``segments`` restricted to a convex ``domain``.

    ``domain`` is a :class:`FundamentalDomain`, a :class:`BBox` or a convex
    vertex list.  Cells are the faces lying inside the domain; each carries an
    exact sample point strictly inside it.
    """
    poly = _domain_polygon(domain)
    box = BBox.from_points(poly)

    raw = [(s.a, s.b) for s in segments]
    raw += [(poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly))]
    raw += [(c, box.corners()[(i + 1) % 4]) for i, c in enumerate(box.corners())]

    segs: list[tuple[Vec2, Vec2]] = []
    seen = set()
    for a, b in raw:
        clipped = _clip(a, b, box)
        if clipped is None:
            continue
        a, b = clipped
        if b < a:
            a, b = b, a
        if (a, b) not in seen:
            seen.add((a, b))
            segs.append((a, b))

    hits = _crossings(segs)

    vertices = set()
    edge_keys = set()
    xs = set()
    for (a, b), pts in zip(segs, hits):
        chain = sorted(set(pts) | {a, b})
        vertices.update(chain)
        for p, q in zip(chain, chain[1:]):
            edge_keys.add((p, q))
    for p in vertices:
        xs.add(p.x)
    xs = sorted(xs)

    verticals: dict[Fraction, list[tuple[Fraction, Fraction]]] = {}
    per_slab: list[dict] = [dict() for _ in range(len(xs) - 1)]
    for a, b in segs:
        if a.x == b.x:
            verticals.setdefault(a.x, []).append((a.y, b.y))
            continue
        slope = (b.y - a.y) / (b.x - a.x)
        i0 = bisect.bisect_left(xs, a.x)
        i1 = bisect.bisect_left(xs, b.x)
        y_prev = a.y if xs[i0] == a.x else a.y + (xs[i0] - a.x) * slope
        for s in range(i0, i1):
            x_next = xs[s + 1]
            y_next = b.y if x_next == b.x else a.y + (x_next - a.x) * slope
            per_slab[s][(y_prev, y_next)] = None
            y_prev = y_next

    for x, ivs in verticals.items():
        ivs.sort()
        merged = [list(ivs[0])]
        for y0, y1 in ivs[1:]:
            if y0 <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], y1)
            else:
                merged.append([y0, y1])
        verticals[x] = [tuple(iv) for iv in merged]

    traps: list[Trapezoid] = []
    slab_traps: list[list[int]] = []
    for s, lines in enumerate(per_slab):
        x0, x1 = xs[s], xs[s + 1]
        ordered = sorted(lines, key=lambda yy: yy[0] + yy[1])
        ids = []
        for (lo0, lo1), (hi0, hi1) in zip(ordered, ordered[1:]):
            ids.append(len(traps))
            traps.append(Trapezoid(x0, x1, lo0, hi0, lo1, hi1))
        slab_traps.append(ids)

    uf = _UnionFind(len(traps))
    for s in range(1, len(slab_traps)):
        x = xs[s]
        walls = verticals.get(x, ())
        left, right = slab_traps[s - 1], slab_traps[s]
        i = j = 0
        while i < len(left) and j < len(right):
            tl, tr = traps[left[i]], traps[right[j]]
            a = max(tl.lo1, tr.lo0)
            b = min(tl.hi1, tr.hi0)
            if a < b and not any(y0 <= a and b <= y1 for y0, y1 in walls):
                uf.union(left[i], right[j])
            if tl.hi1 < tr.hi0:
                i += 1
            elif tr.hi0 < tl.hi1:
                j += 1
            else:
                i += 1
                j += 1

    inside = tuple(polygon_contains(poly, t.sample, strict=True) for t in traps)
    groups: dict[int, list[int]] = {}
    for idx in range(len(traps)):
        groups.setdefault(uf.find(idx), []).append(idx)
    cells = []
    for root in sorted(groups, key=lambda r: groups[r][0]):
        members = groups[root]
        if inside[members[0]]:
            cells.append(Cell(traps[members[0]].sample, tuple(members)))

    edges = tuple(Segment(p, q) for p, q in sorted(edge_keys))
    return Arrangement(
        domain=tuple(poly),
        vertices=frozenset(vertices),
        edges=edges,
        trapezoids=tuple(traps),
        cells=tuple(cells),
        box_face_count=len(groups),
        inside=inside,
    )
