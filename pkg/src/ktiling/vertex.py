"""Local structure of P + X at the vertices of V + X.

At a vertex v every translate whose boundary passes through v contributes an
angular sector (its inner angle, or a flat half-plane when v is inside one of
its edges).  Sectors chain ray to ray into closed wheels; the number of full
turns they make, plus the number of translates whose interior holds v, is the
covering multiplicity.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidEdge, LemmaNotApplicable, NoValidKappa, NotAVertex, WheelChainingFailed
from .geometry import (
    CSPolygon,
    LocationKind,
    Sector,
    Segment,
    Vec2,
    angle_sector,
    cross,
    edge_sector,
    point_location,
)
from .lattice import BBox, TranslateMultiset, enumerate_translates


@dataclass(frozen=True)
class Member:
    """A translate P + t with v on its boundary, at vertex or edge ``index``."""

    t: Vec2
    kind: LocationKind
    index: int

    def sector(self, P: CSPolygon) -> Sector:
        if self.kind is LocationKind.AT_VERTEX:
            return angle_sector(P, self.index)
        return edge_sector(P, self.index)


@dataclass(frozen=True)
class VertexStar:
    v: Vec2
    m: int
    boundary_members: tuple[Member, ...]
    interior_members: tuple[Vec2, ...]
    wheels: tuple[tuple[int, ...], ...] = ()
    windings: tuple[int, ...] = ()
    kappa: int | None = None

    @property
    def ell(self) -> int:
        return sum(1 for mb in self.boundary_members if mb.kind is LocationKind.ON_EDGE)

    @property
    def varphi(self) -> int:
        return len(self.interior_members)

    @property
    def phi(self) -> Fraction:
        return Fraction(sum(self.windings))


def _direction_key(d) -> tuple[int, int]:
    """Primitive integer vector along ``d``; equal keys mean equal rays."""
    x, y = Fraction(d[0]), Fraction(d[1])
    den = math.lcm(x.denominator, y.denominator)
    a, b = int(x * den), int(y * den)
    g = math.gcd(a, b)
    return a // g, b // g


def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(a, b) -> int:
    """Order directions by counterclockwise angle from +x in [0, 2*pi)."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _crosses_reference(sector: Sector) -> int:
    """1 if the open sector contains the direction just above +x, else 0.

    The reference is (1, eps) for infinitesimal eps > 0, so no rational ray
    ever coincides with it.
    """
    a, b = sector
    if a[1] == 0 and a[0] > 0:
        return 1
    b_is_zero = b[1] == 0 and b[0] > 0
    return int(not b_is_zero and _angle_cmp(b, a) < 0)


def star_from_translates(P: CSPolygon, v, translates: Iterable) -> VertexStar:
    """Star of ``v`` against an explicit list of translation vectors."""
    v = Vec2(Fraction(v[0]), Fraction(v[1]))
    boundary, interior = [], []
    for t in translates:
        loc = point_location(P, v - t)
        if loc.kind is LocationKind.INTERIOR:
            interior.append(t)
        elif loc.kind is not LocationKind.EXTERIOR:
            boundary.append(Member(t, loc.kind, loc.index))
    if not any(mb.kind is LocationKind.AT_VERTEX for mb in boundary):
        raise NotAVertex(f"{v} is not a vertex of any translate")
    return VertexStar(v, P.m, tuple(boundary), tuple(interior))


def translate_star(P: CSPolygon, X: TranslateMultiset, v) -> VertexStar:
    v = Vec2(Fraction(v[0]), Fraction(v[1]))
    ts = enumerate_translates(P, X, BBox(v.x, v.x, v.y, v.y))
    return star_from_translates(P, v, ts)


def wheel_partition(P: CSPolygon, star: VertexStar, rng=None) -> VertexStar:
    """Split the boundary members into adjacent wheels and wind each one.

    Deterministic by default: start from the first unused member and, among
    members opening on the current ray, take the one closing soonest.  With
    ``rng`` (a ``random.Random``) starts and ties are drawn at random instead;
    the total winding does not depend on the choice.
    """
    sectors = [mb.sector(P) for mb in star.boundary_members]
    by_start: dict[tuple[int, int], list[int]] = {}
    for i, s in enumerate(sectors):
        by_start.setdefault(_direction_key(s.dir_in), []).append(i)

    unused = set(range(len(sectors)))
    wheels, windings = [], []
    while unused:
        first = rng.choice(sorted(unused)) if rng else min(unused)
        unused.discard(first)
        chain = [first]
        start_key = _direction_key(sectors[first].dir_in)
        ray = sectors[first].dir_out
        while _direction_key(ray) != start_key:
            options = [i for i in by_start.get(_direction_key(ray), ()) if i in unused]
            if not options:
                raise WheelChainingFailed(f"no sector continues ray {ray} at {star.v}")
            if rng:
                nxt = rng.choice(options)
            else:
                cmp = lambda i, j: _angle_from(ray, sectors[i].dir_out, sectors[j].dir_out)
                nxt = min(options, key=functools.cmp_to_key(cmp))
            unused.discard(nxt)
            chain.append(nxt)
            ray = sectors[nxt].dir_out
        w = sum(_crosses_reference(sectors[i]) for i in chain)
        if w < 1:
            raise WheelChainingFailed(f"wheel at {star.v} does not complete a turn")
        wheels.append(tuple(chain))
        windings.append(w)
    return replace(star, wheels=tuple(wheels), windings=tuple(windings))


def _angle_from(ray, e1, e2) -> int:
    # both e1, e2 lie at angle in (0, pi] counterclockwise from ray
    c = cross(e1, e2)
    return -1 if c > 0 else (1 if c < 0 else 0)


def phi(star: VertexStar) -> Fraction:
    if not star.wheels and star.boundary_members:
        raise WheelChainingFailed("star has not been partitioned into wheels")
    return star.phi


def varphi(star: VertexStar) -> int:
    return star.varphi


def lemma2_decompose(phi_value, m: int, ell: int) -> int:
    """kappa with phi = kappa*(m-1)/2 + ell/2, if it is a positive integer."""
    if m < 2 or ell < 0:
        raise ValueError("need m >= 2 and ell >= 0")
    kappa = (2 * Fraction(phi_value) - ell) / (m - 1)
    if kappa.denominator != 1 or kappa <= 0:
        raise NoValidKappa(f"(2*{phi_value} - {ell}) / {m - 1} = {kappa} is not a positive integer")
    return int(kappa)


def vertex_orbit(P: CSPolygon, X: TranslateMultiset) -> list[Vec2]:
    """Distinct points of V + X reduced into the fundamental domain, sorted."""
    L = X.lattice
    pts = {L.reduce(v + o) for o in X.offsets for v in P.vertices}
    return sorted(pts)


def incident_edges(P: CSPolygon, star: VertexStar) -> list[Segment]:
    """Edges of Gamma + X having v as an endpoint, oriented away from v."""
    seen = {}
    for mb in star.boundary_members:
        if mb.kind is not LocationKind.AT_VERTEX:
            continue
        for far in (P.vertex(mb.index + 1), P.vertex(mb.index - 1)):
            far = far + mb.t
            seen.setdefault(far, Segment(star.v, far))
    return [seen[k] for k in sorted(seen)]


def _lemma1_count_in(P: CSPolygon, translates: Sequence, v: Vec2, G: Segment) -> int:
    if G.a == v:
        far = G.b
    elif G.b == v:
        far = G.a
    else:
        raise InvalidEdge(f"{v} is not an endpoint of edge {G.a}-{G.b}")
    mid = Vec2((v.x + far.x) / 2, (v.y + far.y) / 2)
    count = 0
    for t in translates:
        if not point_location(P, v - t).on_boundary:
            continue
        if point_location(P, far - t).kind is LocationKind.EXTERIOR:
            continue
        if point_location(P, mid - t).kind is LocationKind.INTERIOR:
            count += 1
    return count


def lemma1_count(P: CSPolygon, X: TranslateMultiset, v, G: Segment) -> int:
    """Translates with v on their boundary whose interior swallows G minus v.

    Decided by: the far endpoint of G lies in the closed translate and the
    midpoint of G in the open one (convexity makes that sufficient).
    """
    if P.m < 4:
        raise LemmaNotApplicable(f"edge-covering bound needs m >= 4, got m = {P.m}")
    v = Vec2(Fraction(v[0]), Fraction(v[1]))
    ts = enumerate_translates(P, X, BBox(v.x, v.x, v.y, v.y))
    return _lemma1_count_in(P, ts, v, G)


def lemma1_threshold(m: int) -> int:
    return -(-(m - 3) // 2)


@dataclass
class VertexReport:
    star: VertexStar
    k: int
    eq1_value: Fraction
    lemma1_counts: list[tuple[Segment, int]] = field(default_factory=list)
    checks: dict[str, bool | None] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())


def vertex_report(P: CSPolygon, X: TranslateMultiset, v, k: int) -> VertexReport:
    """Every local check at ``v``; failures are recorded, never dropped."""
    star = translate_star(P, X, v)
    failures = []
    try:
        star = wheel_partition(P, star)
    except WheelChainingFailed as exc:
        report = VertexReport(star, k, Fraction(star.varphi))
        report.checks = {"eq1": False, "lemma1": None, "lemma2": False}
        report.failures.append(f"wheels: {exc}")
        return report

    eq1 = star.phi + star.varphi
    checks: dict[str, bool | None] = {"eq1": eq1 == k}
    if eq1 != k:
        failures.append(f"eq1: phi + varphi = {eq1} != {k}")

    counts = []
    if P.m >= 4:
        ts = [mb.t for mb in star.boundary_members]
        need = lemma1_threshold(P.m)
        for G in incident_edges(P, star):
            counts.append((G, _lemma1_count_in(P, ts, star.v, G)))
        bad = [(G, c) for G, c in counts if c < need]
        checks["lemma1"] = not bad
        for G, c in bad:
            failures.append(f"lemma1: edge {G.a}->{G.b} covered by {c} < {need}")
    else:
        checks["lemma1"] = None

    try:
        kappa = lemma2_decompose(star.phi, P.m, star.ell)
        star = replace(star, kappa=kappa)
        checks["lemma2"] = True
    except NoValidKappa as exc:
        checks["lemma2"] = False
        failures.append(f"lemma2: {exc}")

    return VertexReport(star, k, eq1, counts, checks, failures)


def analyze_vertices(P: CSPolygon, X: TranslateMultiset, k: int) -> list[VertexReport]:
    return [vertex_report(P, X, v, k) for v in vertex_orbit(P, X)]
